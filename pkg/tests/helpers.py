import itertools
import random

from udcodes.analysis import check_ud
from udcodes.codebook import MultiUserCode


def random_code(rng: random.Random, n: int, k: int, signed: bool = False,
                max_users: int = 3, max_size: int = 3) -> MultiUserCode:
    low = -(k - 1) if signed else 0
    space = list(itertools.product(range(low, k), repeat=n))
    users = rng.randint(1, max_users)
    cons = [rng.sample(space, rng.randint(1, min(max_size, len(space)))) for _ in range(users)]
    return MultiUserCode.from_words(cons, k, signed)


def random_ud_code(rng: random.Random, n: int, k: int, signed: bool = False,
                   max_users: int = 3, max_size: int = 3, tries: int = 500) -> MultiUserCode:
    """Rejection-sample a small code that passes the exhaustive UD check."""
    for _ in range(tries):
        code = random_code(rng, n, k, signed, max_users, max_size)
        if check_ud(code).is_ud:
            return code
    raise RuntimeError("no UD code found")


def brute_sums(code: MultiUserCode):
    """All (sum word, tuple) pairs by plain itertools enumeration."""
    out = []
    for tup in itertools.product(*(c.words for c in code)):
        out.append((tuple(sum(col) for col in zip(*tup)), tup))
    return out
