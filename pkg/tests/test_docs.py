import re
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
CODE_BLOCK = re.compile(r"```python(.*?)```", flags=re.DOTALL)
DOC_FILES = sorted((ROOT / "docs").glob("*.md")) + [ROOT / "README.md"]


@pytest.mark.parametrize("path", DOC_FILES, ids=lambda p: p.name)
def test_docs(path, tmp_path):
    """Runs the python code blocks of a documentation page as one script."""
    code = "\n".join(CODE_BLOCK.findall(path.read_text()))
    script = tmp_path / "doc_blocks.py"
    script.write_text(code)
    result = subprocess.run(
        [sys.executable, str(script)], cwd=ROOT, capture_output=True, text=True
    )
    assert result.returncode == 0, result.stderr
