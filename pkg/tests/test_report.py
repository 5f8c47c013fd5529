from core.report.claims import CLAIMS, ClaimStatus, run_claims


def test_all_claims_pass():
    claims = run_claims()
    assert len(claims) == len(CLAIMS) == 12
    failed = [c.name for c in claims if c.status is not ClaimStatus.PASS]
    assert failed == []


def test_evidence_carries_the_numbers():
    claims = {c.name: c for c in run_claims()}
    assert claims["sub3-circle-homology"].evidence["homology"] == ["Z", "0", "0", "Z"]
    assert claims["knot-group"].evidence["torus"] == [2, 3]
    assert claims["mobius-degree-two"].evidence["substitutions"] == {"δ": "γ^2"}
    assert claims["sub2-inside-sub3"].evidence["boundary_edges"] == ["β"]
    assert claims["s2-x-s1-rejected"].evidence["abelian_rank"] == 0


def test_misglued_sphere_fails_the_sphere_claims(misglued_builders):
    claims = {c.name: c for c in run_claims(misglued_builders)}
    assert claims["sub3-circle-pi1"].status is ClaimStatus.FAIL
    assert claims["sub3-circle-homology"].status is ClaimStatus.FAIL
    assert claims["mobius-homology"].status is ClaimStatus.PASS
    assert claims["knot-group"].status is ClaimStatus.PASS
