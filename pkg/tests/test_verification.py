from lee_anticodes import verification as vf


def test_verify_all_passes():
    results = vf.verify_all(3, 2, 2, 3, 3)
    assert len(results) == 34
    failures = [r for r in results if not r.passed]
    assert failures == []
    assert len({r.name for r in results}) == 34


def test_verify_lattice_rectangular_case():
    results = vf.verify_lattice(4, 3)
    assert all(r.passed for r in results)
    assert len(results) == 11


def test_check_result_shape():
    results = vf.verify_anticodes(3, 2, 2)
    for r in results:
        assert isinstance(r.name, str) and r.name
        assert r.passed is True
        assert r.detail == ""
