import pytest

import wildsets


def test_hilbert_and_reciprocity():
    X = wildsets.Curve(5)
    assert X.hilbert("t", "2", "t") == -1
    assert X.reciprocity("t^2 + 3*t + 1", "(t - 2)/(t^3 + t + 1)") == 1


def test_ranks():
    r = wildsets.Curve(5).ranks("t^2+2")
    assert (r["rk_sing"], r["rk_delta"], r["rk_G"], r["rk_pic"]) == (2, 1, 0, 1)


def test_construct_verify_round_trip():
    X = wildsets.Curve(5)
    c = X.construct_rank1("t, t-1")
    ok, report = c.verify()
    assert ok, report
    assert sorted(c.wild_points()) == ["t", "t + 4"]
    back = wildsets.Certificate.from_json(c.to_json())
    assert back.verify()[0]
    assert back.to_json() == c.to_json()


def test_flagship():
    E = wildsets.Curve(5, "t^3 - t")
    assert E.is_elliptic
    assert E.smile("t^2+2", "t^2+3")
    c = E.construct_general("t, t-1", "t^2+2, t^2+3")
    assert len(c.wild_points()) == 4


def test_errors():
    X = wildsets.Curve(5)
    with pytest.raises(wildsets.Refusal):
        X.construct_rank1("t")
    with pytest.raises(wildsets.ParseError):
        X.hilbert("t+", "2", "t")
    with pytest.raises(wildsets.WildsetsError):
        wildsets.Curve(3).construct_rank1("t, t-1")


def test_cli():
    code, out, _ = wildsets.run_cli(["hilbert", "--q", "5", "--a", "t", "--b", "2", "--place", "t"])
    assert code == 0 and out == "-1\n"
    assert wildsets.run_cli(["construct", "--q", "5", "--rank", "1", "--places", "t"])[0] == 3
