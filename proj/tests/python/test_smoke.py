import json
import pathlib
import shutil
import subprocess

import jsonschema
import pytest

import legendre

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text(encoding="utf-8"))


def test_field_arithmetic():
    F = legendre.Field(5, 2)
    assert F.q == 25
    assert F.modulus == [2, 0, 1]
    t = F.from_coeffs([0, 1])
    assert F.mul(t, t) == 3
    assert F.mul(7, F.inv(7)) == 1
    assert legendre.Field(13).sqrt(4) == 2
    assert legendre.Field(5).sqrt(2) is None
    assert legendre.Field(3, 2).to_string(8) == "2t+2"
    assert legendre.Field(2, 2).trace(2) == 1
    with pytest.raises(ValueError):
        legendre.Field(4)
    with pytest.raises(ValueError):
        legendre.Field(5).inv(0)
    with pytest.raises(IndexError):
        legendre.Field(5).add(5, 1)


def test_curves():
    F = legendre.Field(5)
    E = legendre.legendre_curve(F, 2)
    assert E.count() == 8
    assert E.group_structure() == (2, 4)
    assert len(E.points()) == 7
    assert E.add((2, 0), (2, 0)) is None
    assert E.twist(2).count() == 4
    assert legendre.legendre_curve(legendre.Field(3, 2), 2).group_structure() == (4, 4)
    assert legendre.orbit(F, 2) == [2, 3, 4]
    assert legendre.legendre_curve(legendre.Field(13), 4).two_isogeny() == 9
    del F  # the curve keeps its field alive
    assert E.count() == 8


def test_classification():
    assert legendre.predict_legendre_isogenous(9, 16)
    assert not legendre.predict_legendre_isogenous(9, 4)
    assert legendre.find_witness(5, 8) == 2
    assert legendre.find_witness(9, 4) is None
    with pytest.raises(IndexError):
        legendre.predict_legendre_isogenous(5, 11)

    records = legendre.classify(9)
    jsonschema.validate(records, schema("class_record"))
    assert sorted(r["N"] for r in records if r["N"] % 4 == 0) == [4, 8, 12, 16]
    assert sorted(r["N"] for r in records if r["legendre_isogenous"]) == [8, 12, 16]

    summaries = legendre.census(3, 60, jobs=2)
    jsonschema.validate(summaries, schema("census"))
    assert all(s["criterion_holds"] for s in summaries)


def test_supersingular_and_stats():
    assert legendre.deuring(7) == [6, 5, 5, 6]
    assert legendre.class_number(23) == 3
    t = legendre.supersingular_lambdas(7)
    assert t["roots_fp"] == [2, 4, 6] and t["s_p"] == 3 and t["h"] == 1

    tables = legendre.supersingular(3, 60)
    jsonschema.validate(tables, schema("ss_table"))
    for row in tables:
        if row["p"] % 4 == 1:
            assert row["s_p"] == 0
        elif row["p"] > 3:
            assert row["s_p"] == 3 * row["h"]

    assert legendre.legendre_sum(5)["S"] == 20
    rows = legendre.stats(3, 100)
    jsonschema.validate(rows, schema("stats"))
    assert all(r["formula_ok"] for r in rows)


def test_char2():
    assert legendre.char2_count(legendre.Field(2, 1), 0, 1) == 4
    rows = legendre.char2_table(1, 5)
    jsonschema.validate(rows, schema("char2"))
    assert all(r["count"] % 4 == 0 for r in rows)


def test_count_records_and_errors():
    rc, out, err = legendre.run("count", q_min=25, q_max=25, lambda_="1,1")
    assert rc == 0 and err == ""
    jsonschema.validate(json.loads(out), schema("curve"))
    with pytest.raises(ValueError):
        legendre.stats(50, 10)
    with pytest.raises(legendre.CapExceeded):
        legendre.Field(2, 21) and legendre.char2_count(legendre.Field(2, 21), 0, 1)


def test_deterministic_across_jobs():
    outs = {legendre.run("census", q_min=3, q_max=50, jobs=j)[1] for j in (1, 2, 4, 1)}
    assert len(outs) == 1


@pytest.mark.skipif(shutil.which("legendre") is None, reason="CLI not on PATH")
def test_installed_cli():
    proc = subprocess.run(["legendre", "stats", "--q-max", "20", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "q,S,S_bar,delta,formula_ok"
    bad = subprocess.run(["legendre", "stats", "--format", "xml", "--q-max", "9"], capture_output=True)
    assert bad.returncode == 2
