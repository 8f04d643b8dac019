import uuid
from contextlib import contextmanager
from pathlib import Path
from tempfile import gettempdir
from typing import Iterator, Optional


@contextmanager
def make_tmpfile(name: Optional[str] = None, suffix: str = "") -> Iterator[Path]:
    """Path of a scratch file (e.g. a key file or json report), removed on exit."""
    name = (name or uuid.uuid4().hex) + suffix
    folder = Path(gettempdir()) / "oblivagg"
    folder.mkdir(parents=True, exist_ok=True)
    path = folder / name
    try:
        yield path
    finally:
        path.unlink(missing_ok=True)
