import io

import pytest

from infodiv import (
    ClusterOptions,
    ParseError,
    NegativeValueError,
    build_matrix,
    dendrogram_from_json,
    divisive_cluster,
    export_dendrogram,
    format_number,
    parse_csv,
    render_dendrogram,
    similarity_csv,
    similarity_matrix,
    write_csv,
)

from conftest import random_matrix

BLOCK = [[4, 4, 0, 0], [4, 4, 0, 0], [0, 0, 4, 4], [0, 0, 4, 4]]


def test_parse_csv_basic():
    m = parse_csv(io.StringIO("x,a,b\nr1,2,0\nr2,0,2\n"))
    assert m.row_labels == ("r1", "r2")
    assert m.values.tolist() == [[2, 0], [0, 2]]


def test_parse_csv_sorts_labels():
    m = parse_csv(io.StringIO("x,b,a\nr2,1,2\nr1,3,4\n"))
    assert m.row_labels == ("r1", "r2")
    assert m.col_labels == ("a", "b")
    assert m.values.tolist() == [[4, 3], [2, 1]]


def test_parse_csv_ragged_row():
    with pytest.raises(ParseError, match="line 3"):
        parse_csv(io.StringIO("x,a,b\nr1,1,2\nr2,1\n"))


def test_parse_csv_negative_cell():
    with pytest.raises(NegativeValueError):
        parse_csv(io.StringIO("x,a,b\nr1,1,-1\n"))


def test_parse_csv_malformed_number():
    with pytest.raises(ParseError, match="line 2"):
        parse_csv(io.StringIO("x,a,b\nr1,one,2\n"))


def test_parse_csv_empty():
    with pytest.raises(ParseError):
        parse_csv(io.StringIO(""))


def test_csv_round_trip(rng):
    m = random_matrix(rng)
    again = parse_csv(io.StringIO(write_csv(m)))
    assert again.row_labels == m.row_labels
    assert again.col_labels == m.col_labels
    assert again.values.tolist() == m.values.tolist()


def test_format_number():
    assert format_number(1.0) == "1.0"
    assert format_number(0.0) == "0.0"
    assert format_number(-0.0) == "0.0"
    assert format_number(0.5) == "0.5"
    assert len(format_number(1 / 3).replace("0.", "")) == 12


def test_export_json_block():
    m = build_matrix(list("abcd"), list("wxyz"), BLOCK)
    text = export_dendrogram(divisive_cluster(m), "json")
    assert text.endswith("\n")
    assert '"global_delta":1.0' in text
    assert '"divisive":true' in text
    tree = dendrogram_from_json(text)
    assert export_dendrogram(tree, "json") == text


def test_export_json_deterministic(rng):
    m = random_matrix(rng)
    d = divisive_cluster(m)
    assert export_dendrogram(d, "json") == export_dendrogram(
        divisive_cluster(m), "json")


def test_newick_single_leaf():
    d = divisive_cluster(build_matrix(["leafy"], ["x", "y"], [[1, 2]]))
    assert export_dendrogram(d, "newick") == "(leafy:0.0);\n"


def test_newick_two_leaves():
    d = divisive_cluster(build_matrix(["a", "b"], ["x", "y"],
                                      [[2, 0], [0, 2]]))
    assert export_dendrogram(d, "newick") == "(a:1.0,b:1.0);\n"


def cumulative_leaf_heights(dend):
    out = {}

    def walk(node):
        if node.is_leaf:
            label = "+".join(sorted(dend.row_labels[i] for i in node.members))
            out[label] = node.height
        else:
            walk(node.children[0])
            walk(node.children[1])

    walk(dend.root)
    return out


def test_newick_branch_lengths_sum_to_heights(rng):
    for _ in range(10):
        m = random_matrix(rng, max_rows=6)
        d = divisive_cluster(m, ClusterOptions(stop_rule="full"))
        text = export_dendrogram(d, "newick")
        # Independent check via a tiny Newick reader.
        expected = cumulative_leaf_heights(d)
        parsed = parse_newick_depths(text)
        for name, h in expected.items():
            assert parsed[name] == pytest.approx(h, abs=1e-9)


def parse_newick_depths(s):
    """Cumulative root-to-leaf path lengths from a Newick string."""
    s = s.strip().rstrip(";")
    pos = 0

    def read_length():
        nonlocal pos
        if pos >= len(s) or s[pos] != ":":
            return 0.0
        pos += 1
        start = pos
        while pos < len(s) and s[pos] not in "(),":
            pos += 1
        return float(s[start:pos])

    def parse_elem():
        nonlocal pos
        if s[pos] == "(":
            pos += 1
            merged = {}
            while True:
                merged.update(parse_elem())
                if s[pos] == ",":
                    pos += 1
                    continue
                assert s[pos] == ")"
                pos += 1
                break
            length = read_length()
            return {k: v + length for k, v in merged.items()}
        start = pos
        while s[pos] != ":":
            pos += 1
        name = s[start:pos]
        return {name: read_length()}

    return parse_elem()


def test_dot_export():
    m = build_matrix(list("abcd"), list("wxyz"), BLOCK)
    text = export_dendrogram(divisive_cluster(m), "dot")
    assert text.startswith("digraph")
    assert 'label="1.0"' in text
    d2 = divisive_cluster(build_matrix(["a", "b"], ["x", "y"],
                                       [[1, 1], [1, 1]]),
                          ClusterOptions(stop_rule="full"))
    assert "style=dashed" in export_dendrogram(d2, "dot")


def test_render_text():
    m = build_matrix(list("abcd"), list("wxyz"), BLOCK)
    out = render_dendrogram(divisive_cluster(m), "text")
    assert "a+b" in out and "c+d" in out
    assert "bits" in out
    single = divisive_cluster(build_matrix(["only"], ["x", "y"], [[1, 2]]))
    assert "only" in render_dendrogram(single, "text")


def test_render_text_marks_nondivisive():
    d = divisive_cluster(build_matrix(["a", "b"], ["x", "y"],
                                      [[1, 1], [1, 1]]),
                         ClusterOptions(stop_rule="full"))
    out = render_dendrogram(d, "text")
    assert "cut line" in out


def test_render_svg():
    m = build_matrix(list("abcd"), list("wxyz"), BLOCK)
    out = render_dendrogram(divisive_cluster(m), "svg")
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")
    assert "cumulative bits" in out
    d2 = divisive_cluster(build_matrix(["a", "b"], ["x", "y"],
                                       [[1, 1], [1, 1]]),
                          ClusterOptions(stop_rule="full"))
    assert "stroke-dasharray" in render_dendrogram(d2, "svg")


def test_similarity_csv_layout():
    m = build_matrix(["a", "b"], ["a", "b"], [[2, 0], [0, 2]])
    text = similarity_csv(similarity_matrix(m, measure="cosine"))
    lines = text.strip().split("\n")
    assert lines[0] == ",a,b"
    assert lines[1] == "a,1.0,0.0"
