import hashlib
import json

import numpy as np
import pytest

from quasisudoku import fixtures
from quasisudoku.errors import KindMismatch, MalformedArray, ParseError
from quasisudoku.mols import fixture_catalog
from quasisudoku.projection import ProjectionSpec, superimpose
from quasisudoku.serialize import (
    csv_text,
    from_dict,
    kind_of,
    load_document,
    read,
    sidecar_path,
    to_dict,
    write,
)
from quasisudoku.sfd import build_sfd
from quasisudoku.sliced_oa import OrthogonalArray

# leading 16 hex digits of sha256 over each embedded table; any edit to the
# transcribed tables shows up here
DIGESTS = {
    "ORDER3": "8a7114a67f9fca64",
    "ORDER4": "accf86613e2bda5c",
    "PRODUCT_A": "1d277bf8d1ad42c0",
    "PRODUCT_B": "9066ac79cdb6c25e",
    "REORDERED_A": "365895b58c1fc0db",
    "REORDERED_B": "9bad20c931c6b66f",
    "PROJECTED_A_MODULAR": "d3f94cf14d94ff91",
    "PROJECTED_B_MODULAR": "60801089010b86f7",
    "OVERLAY_MODULAR": "a1b8bd9b0e334fab",
    "OVERLAY_COORDINATE": "f48a28986ca97ab5",
    "SLICE0_MODULAR": "f20cf7b917d00dbe",
}


@pytest.mark.parametrize("name", sorted(DIGESTS))
def test_fixture_text_unchanged(name):
    text = getattr(fixtures, name)
    assert hashlib.sha256(text.encode()).hexdigest()[:16] == DIGESTS[name]


def _objects(worked, worked_sliced):
    return {
        "latin-square": worked["A1"],
        "mols": fixture_catalog("fig2-order4"),
        "product-square": worked["PA"],
        "quasi-sudoku": worked["QA"],
        "overlay": superimpose(worked["QA"], worked["QB"], ProjectionSpec.modular(4, 3)),
        "oa": worked_sliced.collapsed[0],
        "sliced-oa": worked_sliced,
        "design": build_sfd(worked_sliced, 11),
    }


def _same(a, b):
    kind = kind_of(a)
    if kind == "mols":
        return a.squares == b.squares
    if kind == "sliced-oa":
        return (
            a.full == b.full
            and all(np.array_equal(x, y) for x, y in zip(a.slices, b.slices))
            and a.collapsed == b.collapsed
            and a.collapsed_levels == b.collapsed_levels
            and a.spec == b.spec
        )
    if kind == "design":
        return (
            np.array_equal(a.points, b.points)
            and np.array_equal(a.slice_labels, b.slice_labels)
            and a.seed == b.seed
            and a.provenance == b.provenance
        )
    return a == b


KIND_NAMES = [
    "latin-square",
    "mols",
    "product-square",
    "quasi-sudoku",
    "overlay",
    "oa",
    "sliced-oa",
    "design",
]


class TestRoundTrip:
    @pytest.mark.parametrize("kind", KIND_NAMES)
    def test_dict(self, worked, worked_sliced, kind):
        obj = _objects(worked, worked_sliced)[kind]
        assert kind_of(obj) == kind
        back = from_dict(json.loads(json.dumps(to_dict(obj))), kind)
        assert _same(obj, back)

    @pytest.mark.parametrize("fmt", ["json", "csv"])
    @pytest.mark.parametrize("kind", KIND_NAMES)
    def test_file(self, worked, worked_sliced, tmp_path, kind, fmt):
        obj = _objects(worked, worked_sliced)[kind]
        path = tmp_path / f"obj.{fmt}"
        written = write(obj, path, fmt)
        assert written[0] == path
        if fmt == "csv":
            assert written[1] == sidecar_path(path)
        assert _same(obj, read(path, kind))

    def test_design_floats_exact(self, worked_sliced, tmp_path):
        d = build_sfd(worked_sliced, 5)
        write(d, tmp_path / "d.csv", "csv")
        assert read(tmp_path / "d.csv").points.tobytes() == d.points.tobytes()

    def test_csv_is_headerless(self, worked_sliced):
        text, meta = csv_text(worked_sliced)
        first = text.splitlines()[0].split(",")
        assert first == ["0", "0", "0", "0", "0"]
        assert meta["kind"] == "sliced-oa"

    def test_unknown_object(self):
        with pytest.raises(TypeError):
            kind_of(object())


class TestErrors:
    def test_kind_mismatch(self, worked, tmp_path):
        write(worked["A1"], tmp_path / "a.json")
        with pytest.raises(KindMismatch):
            read(tmp_path / "a.json", "oa")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read(tmp_path / "nope.json")

    def test_bad_json(self, tmp_path):
        (tmp_path / "x.json").write_text("{not json")
        with pytest.raises(ParseError):
            load_document(tmp_path / "x.json")

    def test_no_kind(self, tmp_path):
        (tmp_path / "x.json").write_text('{"rows": []}')
        with pytest.raises(ParseError):
            read(tmp_path / "x.json")

    def test_missing_sidecar(self, tmp_path):
        (tmp_path / "x.csv").write_text("0,1\n1,0\n")
        with pytest.raises(ParseError, match="sidecar"):
            read(tmp_path / "x.csv")

    def test_non_numeric_csv(self, worked, tmp_path):
        write(worked["A1"], tmp_path / "a.csv", "csv")
        (tmp_path / "a.csv").write_text("0,x\n")
        with pytest.raises(ParseError):
            read(tmp_path / "a.csv")

    def test_malformed_fields(self):
        with pytest.raises(ParseError):
            from_dict({"kind": "overlay", "m": 4, "n": 3, "rows": [[1, 2]]})
        with pytest.raises(ParseError):
            from_dict({"kind": "design", "points": [[0.5]], "slice_labels": [0, 1], "seed": 0})
        with pytest.raises(ParseError):
            from_dict({"kind": "teapot"})

    def test_invalid_square_is_design_error(self):
        from quasisudoku.errors import RepeatInColumn

        with pytest.raises(RepeatInColumn):
            from_dict({"kind": "latin-square", "rows": [[0, 1], [0, 1]]})

    def test_oa_shape(self):
        with pytest.raises(MalformedArray):
            from_dict({"kind": "oa", "rows": [[0, 1, 2]], "levels": [2, 2]})
        assert from_dict({"kind": "oa", "rows": [[0, 1]], "levels": [2, 2]}) == OrthogonalArray(
            [[0, 1]], (2, 2)
        )
