import itertools

import pytest

from sympl_moduli import enumerate_labels, validate_label3


@pytest.fixture(scope="session")
def labels2_bound10():
    """Every admissible two-end label with entries up to 10."""
    return enumerate_labels(10, 2)


@pytest.fixture(scope="session")
def label3_candidates_bound8():
    """Every sum-zero triple of pairs with entries up to 8, with its
    list of valid orderings (admissible or not)."""
    rng = range(-8, 9)
    pairs = [(m, mp) for m in rng for mp in rng if (m, mp) != (0, 0)]
    seen = set()
    out = []
    for a, b in itertools.product(pairs, pairs):
        c = (-a[0] - b[0], -a[1] - b[1])
        if c == (0, 0) or abs(c[0]) > 8 or abs(c[1]) > 8:
            continue
        canon = tuple(sorted((a, b, c)))
        if canon in seen:
            continue
        seen.add(canon)
        out.append((canon, validate_label3(canon)[1]))
    return out
