import json
import os
import subprocess
from fractions import Fraction

import pytest

import gkm_hess as g


def test_support_example():
    s = g.support(5, "3,3,4,5,5", "24135")
    assert len(s) == 12
    assert s[0] == "24135"


def test_poincare():
    assert g.poincare(4, "permutohedral") == [1, 11, 11, 1]
    assert g.poincare(5, "permutohedral") == [1, 26, 66, 26, 1]


def test_classes_and_dot():
    c = g.basis_class(3, "2,3,3", "231")
    assert c == {"231": "t1-t3", "321": "t1-t2"}
    assert g.expand(3, "2,3,3", "132", "213") == {"231": "1"}
    # identity acts trivially
    assert g.dot(3, "permutohedral", "213", "123") == g.basis_class(3, "permutohedral", "213")


def test_action_matrix_is_involution():
    r = g.action_matrix(4, "permutohedral", 1, "2134")
    a = [[Fraction(x) for x in row] for row in r["matrix"]]
    d = len(a)
    sq = [[sum(a[i][t] * a[t][j] for t in range(d)) for j in range(d)] for i in range(d)]
    assert sq == [[int(i == j) for j in range(d)] for i in range(d)]


def test_decompose():
    r = g.decompose(5, 2)
    assert r["ok"]
    assert r["total_rank"] == 66
    assert sorted(x["dim"] for x in r["generators"]) == [1, 5, 10, 10, 10, 30]
    assert sum(g.eulerian(5, k) for k in range(5)) == 120


def test_chromatic():
    assert g.chromatic(3, "fullflag", "e") == ["e3", "2e3", "2e3", "e3"]
    assert g.frobenius(4, "permutohedral", 1) == "h4+h31+h22"


def test_verify():
    assert "wz" in g.suite_names()
    r = g.verify("poincare", 4)
    assert r["ok"] and r["checks"]
    with pytest.raises(ValueError):
        g.verify("nope", 4)


def test_bad_input():
    with pytest.raises(ValueError):
        g.support(4, "2,3,4,4", "12345")


@pytest.mark.skipif("GKM_HESS_CLI" not in os.environ, reason="CLI path not given")
def test_cli_matches_module():
    out = subprocess.run([os.environ["GKM_HESS_CLI"], "support", "--n", "5", "--h", "3,3,4,5,5", "--w", "24135"],
                         check=True, capture_output=True, text=True).stdout
    assert json.loads(out)["support"] == g.support(5, "3,3,4,5,5", "24135")
