import os.path

from setuptools import find_packages, setup

root_dir = os.path.dirname(__file__)
with open(os.path.join(root_dir, "README.md"), "r") as f:
    long_description = f.read()


setup(
    name="oblivagg",
    description="Rate-optimal secure aggregation with an oblivious server",
    author="",
    license="BSD-3",
    keywords=[
        "Secure aggregation",
        "Federated learning",
        "Information-theoretic security",
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Programming Language :: Python :: 3 :: Only",
        "License :: OSI Approved :: BSD License",
        "Topic :: Scientific/Engineering",
        "Topic :: Security :: Cryptography",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
    ],
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.8",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "numpy",
        "pandas",
        "pydantic>=1.10.0,<2.0",
        "sympy>=1.12",
        "multiprocess",
        "tqdm",
        "typing-extensions",
    ],
    extras_require={
        "tests": [
            "hypothesis",
            "scipy>=1.7",
            "pyright==1.1.305",
            "pytest",
            "pytest-cov",
        ],
        "docs": [
            "mkdocs",
            "mkdocs-material",
            "mkdocstrings>=0.18",
            "mkdocstrings-python-legacy",
            "mike",
        ],
    },
    entry_points={"console_scripts": ["oblivagg=oblivagg.cli.main:main"]},
)
