'''
Tabular reports shared by the command line: aligned text or CSV.

Cells holding exact fractions are written as p/q; in CSV every such column gets a companion
`<column>_decimal` column (12 significant digits) after the declared columns, in text the decimal
follows the fraction in parentheses.
'''
import typing as tp
import io
import csv
from fractions import Fraction
from . import utils


def _text_cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, Fraction):
        return utils.format_both(value)
    if isinstance(value, (set, frozenset)):
        return utils.format_set(value)
    return str(value)


def _csv_cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return utils.format_fraction(value)
    if isinstance(value, (set, frozenset)):
        return utils.format_set(value)
    return str(value)


class Table(object):
    def __init__(self, columns: tp.Sequence[str], fraction_columns: tp.Sequence[str] = (), title: str = '') -> None:
        self.columns = list(columns)
        self.fraction_columns = [c for c in self.columns if c in set(fraction_columns)]
        self.title = title
        self.rows: tp.List[tp.List[tp.Any]] = []

    def add(self, *values) -> None:
        assert len(values) == len(self.columns)
        self.rows.append(list(values))

    def __len__(self) -> int:
        return len(self.rows)

    def csv_rows(self) -> tp.List[tp.List[str]]:
        index = [self.columns.index(c) for c in self.fraction_columns]
        header = self.columns + ['%s_decimal' % c for c in self.fraction_columns]
        lines = [header]
        for row in self.rows:
            decimals = [utils.format_decimal(row[i]) if isinstance(row[i], Fraction) else '' for i in index]
            lines.append([_csv_cell(v) for v in row] + decimals)
        return lines

    def to_csv(self) -> str:
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator='\n').writerows(self.csv_rows())
        return buffer.getvalue()

    def to_text(self) -> str:
        cells = [self.columns] + [[_text_cell(v) for v in row] for row in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.columns))]
        lines = [self.title] if self.title else []
        for r in cells:
            lines.append('  '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return '\n'.join(lines) + '\n'

    def render(self, fmt: str = 'text') -> str:
        assert fmt in ('text', 'csv'), fmt
        return self.to_csv() if fmt == 'csv' else self.to_text()


def render_lines(lines: tp.Sequence[tp.Tuple[str, tp.Any]], fmt: str = 'text') -> str:
    table = Table(['key', 'value'], fraction_columns=['value'])
    for key, value in lines:
        table.add(key, value)
    if fmt == 'csv':
        return table.to_csv()
    width = max((len(k) for k, _ in lines), default=0)
    return ''.join('%s  %s\n' % (k.ljust(width), _text_cell(v)) for k, v in lines)
