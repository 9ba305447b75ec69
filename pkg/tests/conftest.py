import itertools

from hypothesis import strategies as st

from prettyclean.monomial import DEFAULT_AMBIENT, MonomialIdeal

A = DEFAULT_AMBIENT

monomials = st.tuples(*[st.integers(0, 3)] * 4)
ideals = st.lists(monomials, min_size=1, max_size=5).map(lambda gs: MonomialIdeal(A, gs))
proper_ideals = ideals.filter(lambda I: I.is_proper())


def brute_box(*ideals, extra=()):
    """Box (max exponent + 1)^4 that decides membership questions for these ideals."""
    top = [0] * 4
    for I in ideals:
        for g in I.gens:
            top = [max(a, b) for a, b in zip(top, g)]
    for m in extra:
        top = [max(a, b) for a, b in zip(top, m)]
    return list(itertools.product(*[range(t + 2) for t in top]))


def in_ideal(m, gens):
    return any(all(a >= b for a, b in zip(m, g)) for g in gens)


# acceptance lines, printed in the terminal summary so they survive output capture
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
