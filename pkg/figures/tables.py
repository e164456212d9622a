import csv
import logging
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

logger = logging.getLogger(__name__)

Cell = Optional[float]


class FigureTable(BaseModel):
    """Ordered rows destined for CSV; None marks an empty cell"""
    model_config = ConfigDict(frozen=True)

    title: str
    column_names: Tuple[str, ...]
    rows: Tuple[Tuple[Cell, ...], ...]

    @model_validator(mode='after')
    def _check_shape(self) -> 'FigureTable':
        width = len(self.column_names)
        previous = None
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row {row} does not match the {width} columns of {self.title!r}")
            if row[0] is None or (previous is not None and not row[0] > previous):
                raise ValueError(f"first column of {self.title!r} must be strictly increasing")
            previous = row[0]
        return self

    def column(self, name: str) -> List[Cell]:
        index = self.column_names.index(name)
        return [row[index] for row in self.rows]


def format_number(value: Cell) -> str:
    return '' if value is None else f'{value:.12g}'


@contextmanager
def replace_atomically(path: Path, mode: str = 'w'):
    """Write through a temporary sibling so a failed run leaves no partial file"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.', suffix='.tmp')
    try:
        with os.fdopen(handle, mode, encoding='utf-8', newline='') as stream:
            yield stream
        os.chmod(temporary, 0o644)
        os.replace(temporary, path)
    except BaseException:
        os.unlink(temporary)
        raise


def write_csv(table: FigureTable, path: Path) -> Path:
    with replace_atomically(path) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(table.column_names)
        for row in table.rows:
            writer.writerow([format_number(value) for value in row])
    logger.info("Wrote %d rows of %r to %s", len(table.rows), table.title, path)
    return Path(path)
