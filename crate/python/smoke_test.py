"""Smoke test for the semihopf_py extension module."""

import semihopf_py as sh


def main():
    r = sh.census(30, rules="R1..R8")
    assert r["survivors"] == ["1,2;2,7", "1,3;3,3", "1,5;5,1", "1,6;2,6", "1,10;2,5"], r["survivors"]

    r = sh.census(36, oracle=["1,2;3,2;4,1"])
    assert r["oracle"][0]["verdict"] == "infeasible"
    assert len(r["final"]) == 9

    assert sh.fusion_search("1,2;2,1")["verdict"] == "feasible"
    assert sh.fusion_search("1,2;2,1;4,1")["verdict"] == "infeasible"
    assert sh.fusion_search("1,2;2,7;3,2", budget=3)["verdict"] == "inconclusive"
    assert sh.fusion_verify_group("Q8")["passed"] is True

    assert sh.double_type("D4") == "1,8;2,14"
    assert sh.double_type("S3") == "1,2;2,4;3,2"

    h8 = sh.h8_report()
    assert h8["axioms"]["passed"] and h8["yd_pairs"]["count"] == 8

    t = sh.twist("G12", "Gamma", '[["0","1/2"],["1/2","0"]]', check_cocommutative=True, group_likes=True)
    assert t["cocommutative"] is False
    assert t["surviving_group_likes"]["count"] == 4

    try:
        sh.double_type("Nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown group accepted")

    code, out, _ = sh.run(["--format", "table", "double", "--group", "Q8"])
    assert code == 0 and "1,8;2,14" in out
    print("smoke test passed")


if __name__ == "__main__":
    main()
