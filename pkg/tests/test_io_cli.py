import json

import pytest

from resolvekit.cli import main
from resolvekit.families import complete, grid, path
from resolvekit.io import (
    FormatError,
    format_edge_list,
    format_partition,
    format_vertex_set,
    parse_edge_list,
    parse_partition,
    parse_vertex_set,
)
from resolvekit.resolvability import OrderedPartition, VertexSequence


class TestEdgeListFormat:
    def test_round_trip(self):
        g = grid(3, 3)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks(self):
        text = "# header comment\n3 2\n\n0 1  # an edge\n1 2\n"
        g = parse_edge_list(text)
        assert g.n == 3 and g.m == 2

    def test_bad_header(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_edge_list("nonsense\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError, match="promises 3"):
            parse_edge_list("3 3\n0 1\n")

    def test_self_loop_line_number(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_edge_list("3 2\n0 1\n2 2\n")

    def test_out_of_range_line_number(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_edge_list("2 1\n0 5\n")


class TestPartitionAndSetFormats:
    def test_partition_round_trip(self):
        pi = OrderedPartition(((0, 3), (1,), (2, 4)))
        assert parse_partition(format_partition(pi)) == pi

    def test_set_round_trip(self):
        s = VertexSequence((4, 0, 2))
        assert parse_vertex_set(format_vertex_set(s)) == s

    def test_bad_ids(self):
        with pytest.raises(FormatError):
            parse_partition("0 x\n")
        with pytest.raises(FormatError):
            parse_vertex_set("1 1\n")


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, out

    def test_gen_dim_pipeline(self, tmp_path, capsys):
        f = tmp_path / "p5.edges"
        assert main(["gen", "path", "5", "-o", str(f)]) == 0
        code, out = self.run(capsys, "dim", str(f))
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == 1 and doc["witness"] == [0]

    def test_gen_round_trip(self, tmp_path):
        f = tmp_path / "c6.edges"
        assert main(["gen", "cycle", "6", "-o", str(f)]) == 0
        from resolvekit.families import cycle

        assert parse_edge_list(f.read_text()) == cycle(6)

    def test_pd_exit_codes(self, tmp_path, capsys):
        f = tmp_path / "k5.edges"
        f.write_text(format_edge_list(complete(5)))
        code, out = self.run(capsys, "pd", str(f))
        assert code == 0 and json.loads(out)["value"] == 5
        code, out = self.run(capsys, "pd", str(f), "--limit", "3")
        assert code == 3 and json.loads(out)["value"] is None

    def test_verify_partition_not_resolving(self, tmp_path, capsys):
        g = tmp_path / "k3.edges"
        g.write_text(format_edge_list(complete(3)))
        p = tmp_path / "bad.partition"
        p.write_text("0 1\n2\n")
        code, out = self.run(capsys, "verify-partition", str(g), str(p))
        assert code == 1
        assert json.loads(out)["witness"] == [0, 1]

    def test_verify_set_resolving(self, tmp_path, capsys):
        g = tmp_path / "p4.edges"
        g.write_text(format_edge_list(path(4)))
        s = tmp_path / "s.set"
        s.write_text("0\n")
        code, out = self.run(capsys, "verify-set", str(g), str(s))
        assert code == 0
        assert json.loads(out)["verdict"] == "resolving"

    def test_malformed_input_exit_2(self, tmp_path, capsys):
        f = tmp_path / "bad.edges"
        f.write_text("not a graph\n")
        assert main(["dim", str(f)]) == 2

    def test_product_and_construct(self, tmp_path, capsys):
        g2 = tmp_path / "p2.edges"
        g2.write_text(format_edge_list(path(2)))
        prod = tmp_path / "c4.edges"
        assert main(["product", str(g2), str(g2), "-o", str(prod)]) == 0
        assert parse_edge_list(prod.read_text()).m == 4

        pi = tmp_path / "p2.pi"
        pi.write_text("0\n1\n")
        code, out = self.run(
            capsys,
            "construct", "--theorem", "1",
            "--g1", str(g2), "--pi1", str(pi),
            "--g2", str(g2), "--pi2", str(pi),
            "--out-prefix", str(tmp_path / "plan"),
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["classes"] == 4
        assert doc["certificate"]["verdict"] == "resolving"
        assert (tmp_path / "plan.partition").exists()
        assert (tmp_path / "plan.cert.json").exists()

    def test_construct_rejects_bad_factor(self, tmp_path, capsys):
        g = tmp_path / "k3.edges"
        g.write_text(format_edge_list(complete(3)))
        pi = tmp_path / "bad.pi"
        pi.write_text("0 1\n2\n")
        s = tmp_path / "s.set"
        s.write_text("0 1\n")
        code = main([
            "construct", "--theorem", "2",
            "--g1", str(g), "--pi1", str(pi),
            "--g2", str(g), "--set", str(s),
        ])
        assert code == 1

    def test_bounds_json(self, tmp_path, capsys):
        f = tmp_path / "p3.edges"
        f.write_text(format_edge_list(path(3)))
        code, out = self.run(
            capsys, "bounds", "--g1", str(f), "--g2", str(f), "--exact-product"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["product"]["pd"] == 3
        names = {b["name"]: b for b in doc["bounds"]}
        assert names["dim1+dim2+1"]["tight"] is True

    def test_deterministic_output_modulo_timing(self, tmp_path, capsys):
        f = tmp_path / "g.edges"
        f.write_text(format_edge_list(grid(2, 3)))
        docs = []
        for _ in range(2):
            code, out = self.run(capsys, "pd", str(f))
            assert code == 0
            doc = json.loads(out)
            doc.pop("wall_ms")
            docs.append(doc)
        assert docs[0] == docs[1]

    def test_manifest(self, tmp_path, capsys):
        f = tmp_path / "p3.edges"
        f.write_text(format_edge_list(path(3)))
        mf = tmp_path / "manifest.json"
        code, _ = self.run(capsys, "dim", str(f), "--manifest", str(mf))
        assert code == 0
        doc = json.loads(mf.read_text())
        assert str(f) in doc["inputs"]
        assert doc["version"]

    def test_usage_error(self):
        assert main(["no-such-command"]) == 2
