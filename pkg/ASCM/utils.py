import typing as tp
import itertools
import decimal
from fractions import Fraction

general_prob = tp.Union[Fraction, int, str]
NameSet = tp.FrozenSet[str]

DECIMAL_DIGITS = 12


def to_fraction(value: general_prob) -> Fraction:
    '''
    Exact rational from an int, a Fraction, or a decimal/fraction literal ("0.4", "1/18").
    Floats are rejected since they rarely hold the intended value.
    '''
    if isinstance(value, float):
        raise TypeError('float probabilities are not exact, pass a string or Fraction instead')
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def format_decimal(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    value = Fraction(value)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        d = decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)
        d = d.normalize()
    return format(d, 'f')


def format_both(value: tp.Optional[Fraction]) -> str:
    if value is None:
        return '-'
    return '%s (%s)' % (format_fraction(value), format_decimal(value))


def format_set(names: tp.Iterable[str]) -> str:
    return '{' + ', '.join(sorted(names)) + '}'


def format_family(family: tp.Iterable[tp.Iterable[str]]) -> str:
    return '[' + ', '.join(format_set(s) for s in family) + ']'


def set_key(names: tp.Iterable[str]) -> tp.Tuple[int, tp.Tuple[str, ...]]:
    # size first, then lexicographic by feature name
    names = tuple(sorted(names))
    return (len(names), names)


def sort_family(family: tp.Iterable[tp.Iterable[str]]) -> tp.List[NameSet]:
    return sorted((frozenset(s) for s in family), key=set_key)


def subsets(names: tp.Iterable[str], nonempty: bool = False) -> tp.Iterator[NameSet]:
    names = sorted(names)
    start = 1 if nonempty else 0
    for k in range(start, len(names) + 1):
        for combo in itertools.combinations(names, k):
            yield frozenset(combo)


def parse_names(text: tp.Optional[str]) -> tp.List[str]:
    if text is None:
        return []
    text = text.strip().strip('{}')
    return [item.strip() for item in text.split(',') if item.strip()]


def make_slices(N: int, max_len: int) -> tp.List[slice]:
    n = (N - 1) // max_len + 1
    lst = [slice(i * max_len, (i + 1) * max_len, None) for i in range(n - 1)]
    lst.append(slice((n - 1) * max_len, N))
    return lst


def part_slice(N: int, part: tp.Tuple[int, int]) -> slice:
    i, n = part
    assert n >= 1 and 0 <= i < n
    max_len = max((N - 1) // n + 1, 1)
    slices = make_slices(N, max_len) if N > 0 else []
    if i < len(slices):
        return slices[i]
    return slice(N, N)
