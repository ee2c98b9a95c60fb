import pytest

from hankelforge.algebra import var
from hankelforge.qseries import moment_mu
from hankelforge.sequences import SequenceKind, delannoy, parse_kind, q_schroder, seq_prefix, seq_value

q = var("q")


def test_known_prefixes():
    assert seq_prefix("catalan", 6) == [1, 1, 2, 5, 14, 42, 132]
    assert seq_prefix("b", 4) == [1, 3, 10, 35, 126]
    assert seq_prefix("d", 4) == [1, 2, 6, 20, 70]
    assert seq_prefix("motzkin", 6) == [1, 1, 2, 4, 9, 21, 51]
    assert seq_prefix("schroder", 5) == [1, 2, 6, 22, 90, 394]
    assert seq_prefix("delannoy-diag", 4) == [1, 3, 13, 63, 321]


def test_spot_values():
    assert seq_value(SequenceKind.CATALAN, 3) == 5
    assert seq_value("MOTZKIN", 4) == 9
    assert seq_value("delannoy_diag", 2) == 13


def test_large_index_is_exact():
    assert seq_value("motzkin", 600) > 10**200
    assert seq_value("schroder", 300) % 2 == 0


def test_delannoy():
    assert delannoy(5, 0) == 1 and delannoy(0, 5) == 1
    assert delannoy(1, 1) == 3
    assert delannoy(3, 3) == 63
    assert delannoy(2, 3) == delannoy(3, 2) == 25


def test_q_schroder():
    assert q_schroder(0) == 1
    assert q_schroder(1) == q + 1
    assert [q_schroder(n).evaluate({"q": 1}) for n in range(6)] == seq_prefix("schroder", 5)


def test_q_moment_kind():
    assert seq_value("q-moment", 2) == moment_mu(2)
    assert SequenceKind.Q_MOMENT.symbolic and not SequenceKind.CATALAN.symbolic


def test_errors():
    with pytest.raises(ValueError):
        parse_kind("fibonacci")
    with pytest.raises(ValueError):
        seq_value("catalan", -1)
