import random

from hypothesis import settings
from hypothesis import strategies as st

from extspringer.partitions import Partition, partitions_of
from extspringer.tableaux import RowStrictTableau

# memoised enumerations make first calls much slower than later ones
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    return draw(st.sampled_from(list(partitions_of(n))))


@st.composite
def tableaux(draw, n_min=1, n_max=9):
    lam = draw(partitions(n_min, n_max))
    labels = draw(st.permutations(range(1, lam.n + 1)))
    rows, k = [], 0
    for p in lam:
        rows.append(sorted(labels[k:k + p]))
        k += p
    return RowStrictTableau(rows)


def random_tableau(lam: Partition, rng: random.Random) -> RowStrictTableau:
    labels = list(range(1, lam.n + 1))
    rng.shuffle(labels)
    rows, k = [], 0
    for p in lam:
        rows.append(sorted(labels[k:k + p]))
        k += p
    return RowStrictTableau(rows)
