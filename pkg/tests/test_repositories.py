"""
Testes dos repositories de famílias e de relatórios.
"""
import csv
import json

import pytest

from emc_lab.exceptions import InputError
from emc_lab.models.comum import Finding
from emc_lab.models.oraculo import OracleRow
from emc_lab.repositories.familias_repo import familias_repo
from emc_lab.repositories.relatorios_repo import CSV_FIELDS, relatorios_repo
from tests.helpers import familia


def test_parse_text():
    f = familias_repo.parse_text("5 2 2\n1 2\n2 3\n\n2 4\n")
    assert f.params.n == 5 and f.params.k == 2 and f.params.s == 2
    assert f.as_elements() == [[1, 2], [2, 3], [2, 4]]


@pytest.mark.parametrize(
    "text,line",
    [
        ("5 2 2\n1 2\n2 1\n", 3),
        ("5 2 2\n1 2\n1 2 3\n", 3),
        ("5 2 2\n1 6\n", 2),
        ("5 2\n1 2\n", 1),
        ("5 2 2\n1 x\n", 2),
    ],
)
def test_parse_text_errors_name_the_line(text, line):
    with pytest.raises(InputError) as exc:
        familias_repo.parse_text(text)
    assert exc.value.line == line
    assert f"linha {line}" in str(exc.value)


def test_parse_empty_text():
    with pytest.raises(InputError):
        familias_repo.parse_text("\n\n")


def test_text_file_round_trip(tmp_path):
    f = familia(5, 2, 2, [[1, 2], [2, 3], [2, 4], [2, 5]])
    path = familias_repo.write(f, tmp_path / "estrela.txt")
    assert path.read_text().splitlines()[0] == "5 2 2"
    assert familias_repo.read(path) == f


def test_json_file_round_trip(tmp_path):
    f = familia(6, 3, 2, [[4, 5, 6], [1, 5, 6]])
    path = familias_repo.write(f, tmp_path / "familia.json")
    assert json.loads(path.read_text()) == {
        "k": 3,
        "n": 6,
        "s": 2,
        "sets": [[1, 5, 6], [4, 5, 6]],
    }
    assert familias_repo.read(path) == f


def test_invalid_json_is_input_error(tmp_path):
    path = tmp_path / "ruim.json"
    path.write_text('{"n": 4, "k": 2, "s": 2, "sets": [[1, 2], [1, 2]]}')
    with pytest.raises(InputError):
        familias_repo.read(path)
    path.write_text("{")
    with pytest.raises(InputError):
        familias_repo.read(path)


@pytest.mark.parametrize(
    "sets,line",
    [([[1.9, 3], [2, 4.7]], 1), ([[1, 3], [True, 4]], 2), ([[1, 3], ["2", 4]], 2)],
)
def test_json_rejects_non_integer_elements(sets, line):
    with pytest.raises(InputError) as exc:
        familias_repo.from_json({"n": 4, "k": 2, "s": 2, "sets": sets})
    assert exc.value.line == line


def test_write_report_isolates_timestamp(tmp_path):
    body = {"b": [3, 2, 1], "a": {"z": 1, "y": 2}}
    first = json.loads(relatorios_repo.write_report("bound", body, tmp_path / "r1.json").read_text())
    second = json.loads(relatorios_repo.write_report("bound", body, tmp_path / "r2.json").read_text())
    assert first["header"]["command"] == "bound"
    assert first["header"]["schema_version"] == 1
    assert "generated_at" in first["header"]
    assert first["body"] == second["body"] == body
    assert relatorios_repo.dumps_body(body) == relatorios_repo.dumps_body(dict(reversed(body.items())))


def test_write_csv(tmp_path):
    rows = [OracleRow(n=6, k=2, s=3, f="10", method="covering+direct", bound="10", match="true")]
    path = relatorios_repo.write_csv(rows, tmp_path / "tabela.csv")
    with path.open() as handle:
        reader = csv.DictReader(handle)
        assert reader.fieldnames == CSV_FIELDS
        assert next(reader)["f"] == "10"


def test_write_findings(tmp_path):
    findings = [Finding(claim="a_p_present", message="x", seed=7, evidence={"p": 1})]
    paths = relatorios_repo.write_findings(findings, tmp_path / "hunt.json")
    assert [p.name for p in paths] == ["finding_0000_a_p_present.json"]
    assert paths[0].parent.name == "hunt_findings"
    assert json.loads(paths[0].read_text())["seed"] == 7
    assert relatorios_repo.write_findings([], tmp_path / "hunt.json") == []
