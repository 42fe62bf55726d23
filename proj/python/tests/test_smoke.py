import pytest

import subtractive as sb

S3_TEXT = """\
semiring S3
elements 0 1 T
zero 0
one 1
add
0 1 T
1 T T
T T T
mul
0 0 0
0 1 T
0 T T
"""


def test_parse_and_builtin_agree():
    s3 = sb.parse_semiring(S3_TEXT)
    assert s3 == sb.builtin("truncated_nat", 2)
    assert s3.order == 3
    assert s3.labels == ["0", "1", "T"]
    assert sb.parse_semiring(s3.render()) == s3


def test_parse_errors():
    with pytest.raises(sb.ParseError):
        sb.parse_semiring(S3_TEXT.replace("one 1\n", ""))
    with pytest.raises(sb.AxiomViolation):
        sb.parse_semiring(S3_TEXT.replace("1 T T\nT T T\nmul", "1 T 1\nT T T\nmul"))
    with pytest.raises(sb.Error):
        sb.builtin("nope")


def test_ideals_and_closure():
    s3 = sb.builtin("truncated_nat", 2)
    ideals = sb.ideals(s3)
    assert [repr(i) for i in ideals] == ["{0}", "{0,T}", "{0,1,T}"]
    top = sb.generate_ideal(s3, ["T"])
    assert top.members == ["0", "T"]
    assert not top.is_subtractive()
    assert top.witness() == ("T", "1")
    assert top.closure() == ideals[2]


def test_natural_counterexample():
    i = sb.NatIdeal([2]) + sb.NatIdeal([3])
    assert repr(i) == "<2,3> = {0,2,3,4,...} (cofinite, missing {1})"
    assert 1 not in i and all(n in i for n in range(2, 101))
    assert sb.NatIdeal([2]).is_subtractive()
    assert not i.is_subtractive()
    assert i.witness() == (2, 1)


def test_topology():
    s3 = sb.builtin("truncated_nat", 2)
    down = sb.build_space(s3, "downset")
    assert down.subbasis == [[0], [0, 1, 2]]
    assert down.is_T0() == (False, (1, 2))
    fixed = sb.build_space(s3, "fixedpoint")
    assert fixed.closed_sets() == [[], [0], [2], [0, 2], [0, 1, 2]]
    assert fixed.point_closure(1) == [0, 1, 2]


def test_search_and_homomorphisms():
    two = sb.search(2)
    assert len(two) == 2
    b = sb.builtin("boolean")
    assert sb.homomorphisms(b, b) == [[0, 1]]
    assert sb.homomorphisms(b, sb.builtin("truncated_nat", 2)) == []


def test_check_report_lines():
    lines, code = sb.check([sb.builtin("truncated_nat", 2)], claims=["C9", "C12"], semantics=["downset"])
    assert lines == [
        "CLAIM C9 STRUCT S3 SEM downset RESULT fails WITNESS P1={0,T} P2={0,1,T} cl={P0,P1,P2}",
        "CLAIM C12 STRUCT S3 SEM downset RESULT fails WITNESS D={P0,P1,P2} generic={P1,P2}",
    ]
    assert code == 0
