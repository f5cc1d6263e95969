import json
import math
import pathlib

import pytest

import monoendo

CONFIGS = pathlib.Path(__file__).resolve().parents[2] / "configs"


def test_version_and_schema():
    r = monoendo.analyze({"cartan_type": "A2", "chi": ["0", "0"]})
    assert r["schema"] == monoendo.REPORT_SCHEMA
    assert r["version"] == monoendo.__version__
    assert r["endoscopic"]["H"] == "A2"
    assert len(r["blocks"]) == 1


def test_sp2n_endoscopy():
    assert monoendo.endoscopic_type("C2", ["1/2", "1/2"]) == "A1xA1"
    assert monoendo.endoscopic_type("C3", ["1/2", "1/2", "1/2"]) == "A3"
    assert monoendo.endoscopic_type("A2", ["2/3", "2/3"]) == "torus"


@pytest.mark.parametrize(
    "n,q", [(n, q) for n in range(2, 7) for q in (2, 3, 4, 5, 7, 9) if math.gcd(n, q) == 1]
)
def test_sln_counts(n, q):
    chi = [f"{n - 1}/{n}"] * (n - 1)
    t = f"A{n - 1}"
    assert monoendo.count_torus_case(t, chi, q) == math.gcd(n, q - 1) ** 2
    assert monoendo.count_torus_case(t, chi, q, delta="unitary") == math.gcd(n, q + 1) ** 2


def test_shipped_configs():
    su3 = (CONFIGS / "su3.json").read_text()
    assert monoendo.count(su3)["count"] == 9
    assert monoendo.count((CONFIGS / "sl3_split.json").read_text())["count"] == 9
    kl = monoendo.kl((CONFIGS / "a3_trivial.json").read_text())
    ps = [t["P"] for row in kl["canonical_basis"] for t in row["terms"]]
    assert [[0, 1], [1, 1]] in ps
    c = monoendo.cocycle((CONFIGS / "sp4_half_half.json").read_text())
    assert c["trivialization"] is not None
    b = monoendo.bsl((CONFIGS / "sp4_half_zero.json").read_text(), [2, 1, 2])
    assert b["rewrite"]["ell_beta"] == 1


def test_errors():
    with pytest.raises(monoendo.InputError):
        monoendo.analyze({"cartan_type": "A2", "chi": ["1/2", "x"]})
    with pytest.raises(ValueError):
        monoendo.analyze("{not json")
    with pytest.raises(monoendo.RefusalError):
        monoendo.count({"cartan_type": "C2", "chi": ["1/2", "0"], "q": 5})


def test_deterministic():
    cfg = json.loads((CONFIGS / "sp4_half_zero.json").read_text())
    assert monoendo.run("cells", json.dumps(cfg)) == monoendo.run("cells", json.dumps(cfg))
