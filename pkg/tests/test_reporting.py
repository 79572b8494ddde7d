"""
报告输出测试

覆盖：
1. 容量曲线 CSV 的格式、解析、空曲线拒绝写出
2. 生成元 SVG：顶点个数、单记忆单色、可复现、弦线上限
3. 生成元 JSON 报告字段
4. 记忆文件解析
"""

import io
import json
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.errors import InvariantViolationError, SizingError
from src.experiment import generator_snapshot
from src.network import BipolarVector, GeneratorMap
from src.reporting import (
    PolygonLayout,
    emit_capacity_csv,
    emit_generator_report,
    emit_generator_svg,
    parse_capacity_csv,
    plot_capacity_curves,
    render_capacity_csv,
    render_generator_svg,
)
from src.reporting.report import build_generator_report
from src.reporting.svg import CHORD_LIMIT, PALETTE, palette_for, vertex_memory
from src.state import CapacityCurves
from src.tools.memory_file import format_memories, parse_memories, read_memories


def circles(svg: str) -> list:
    return [line for line in svg.splitlines() if line.startswith("<circle")]


def fills(svg: str) -> set:
    return {line.split('fill="')[1].split('"')[0] for line in circles(svg)}


def test_capacity_csv_single_memory_row():
    curves = CapacityCurves((1,), (1.0,), (1.0,))
    assert render_capacity_csv(curves) == "fed,stored_avg,retrieved_avg\n1,1.000000,1.000000\n"


def test_capacity_csv_rows_and_parse():
    curves = CapacityCurves((1, 2, 3), (1.0, 1.5, 2.25), (1.0, 1.25, 0.5), iterations=4)
    text = render_capacity_csv(curves)
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[2] == "2,1.500000,1.250000"
    parsed = parse_capacity_csv(text)
    assert parsed.fed == (1, 2, 3)
    assert parsed.stored_avg == pytest.approx(curves.stored_avg)
    assert parsed.retrieved_avg == pytest.approx(curves.retrieved_avg)


def test_capacity_csv_rejects_empty_curves(tmp_path):
    path = tmp_path / "out" / "empty.csv"
    with pytest.raises(InvariantViolationError):
        emit_capacity_csv(CapacityCurves((), (), ()), path)
    assert not path.exists()


def test_capacity_csv_rejects_bad_header():
    with pytest.raises(InvariantViolationError):
        parse_capacity_csv("k,a,b\n1,1,1\n")


def test_capacity_csv_to_stream():
    buffer = io.StringIO()
    emit_capacity_csv(CapacityCurves((1, 2), (1.0, 2.0), (1.0, 1.0)), buffer)
    assert buffer.getvalue().startswith("fed,stored_avg,retrieved_avg\n")


def test_plot_capacity_curves_writes_png(tmp_path):
    curves = CapacityCurves((1, 2, 3), (1.0, 2.0, 2.5), (1.0, 1.5, 1.0), iterations=2)
    path = plot_capacity_curves(curves, tmp_path / "curve.png", title="12 Neurons and 2 Iterations")
    assert path.exists()
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_svg_has_one_vertex_per_neuron():
    snapshot = generator_snapshot(16, 4, seed=3)
    svg = render_generator_svg(snapshot.generator_map, PolygonLayout(16))
    assert len(circles(svg)) == 16
    assert svg.count('id="neuron-') == 16
    assert svg.count("<line ") == 16 * 15 // 2


def test_svg_single_memory_is_single_colored():
    snapshot = generator_snapshot(10, 1, seed=2)
    svg = render_generator_svg(snapshot.generator_map, PolygonLayout(10))
    assert fills(svg) == {PALETTE[0]}


def test_svg_non_generators_are_unfilled():
    gmap = GeneratorMap(3, 2, (1, -1), {(1, 1): None, (1, -1): 1, (2, 1): 0, (2, -1): 1, (3, 1): None, (3, -1): None})
    svg = render_generator_svg(gmap, PolygonLayout(3))
    lines = circles(svg)
    assert f'fill="{PALETTE[1]}"' in lines[0]
    # +1 极性优先
    assert f'fill="{PALETTE[0]}"' in lines[1]
    assert 'fill="none"' in lines[2]


def test_palette_colors_are_unique_beyond_fixed_list():
    colors = palette_for(60)
    assert colors[: len(PALETTE)] == list(PALETTE)
    assert len(set(colors)) == 60
    assert palette_for(60) == colors


def test_svg_one_color_per_memory_past_palette():
    count = len(PALETTE) + 5
    records = {}
    for neuron in range(1, count + 1):
        records[(neuron, 1)] = neuron - 1
        records[(neuron, -1)] = None
    gmap = GeneratorMap(count, count, (1, -1), records)
    svg = render_generator_svg(gmap, PolygonLayout(count))
    assert len(fills(svg)) == count

    # 记忆 1 与记忆 21 不能共用一个颜色
    wrapped = GeneratorMap(4, 21, (1,), {(1, 1): 0, (2, 1): 20, (3, 1): None, (4, 1): None})
    lines = circles(render_generator_svg(wrapped, PolygonLayout(4)))
    assert f'fill="{PALETTE[0]}"' in lines[0]
    assert f'fill="{PALETTE[0]}"' not in lines[1]
    assert len(fills("\n".join(lines))) == 3


def test_svg_default_load_keeps_memories_apart():
    gmap = generator_snapshot(64, 39, seed=5).generator_map
    svg = render_generator_svg(gmap, PolygonLayout(64))
    colored = {vertex_memory(gmap, k) for k in range(1, 65)} - {None}
    assert len(fills(svg) - {"none"}) == len(colored)


def test_svg_is_byte_stable(tmp_path):
    gmap = generator_snapshot(16, 4, seed=3).generator_map
    a = emit_generator_svg(gmap, PolygonLayout(16), tmp_path / "a.svg")
    b = emit_generator_svg(generator_snapshot(16, 4, seed=3).generator_map, PolygonLayout(16), tmp_path / "b.svg")
    assert a == b
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


def test_svg_drops_chords_for_large_networks():
    n = CHORD_LIMIT + 1
    gmap = GeneratorMap(n, 0, (1, -1), {})
    svg = render_generator_svg(gmap, PolygonLayout(n))
    assert "<line " not in svg
    assert len(circles(svg)) == n


def test_svg_layout_size_mismatch():
    gmap = GeneratorMap(4, 0, (1, -1), {})
    with pytest.raises(SizingError):
        render_generator_svg(gmap, PolygonLayout(5))


def test_polygon_layout_positions():
    layout = PolygonLayout(4, scale=100, margin=10)
    assert layout.size == 220
    x, y = layout.position(1)
    assert (x, y) == pytest.approx((210.0, 110.0))
    x, y = layout.position(2)
    assert (x, y) == pytest.approx((110.0, 210.0))
    with pytest.raises(SizingError):
        PolygonLayout(1)


def test_report_single_memory_fields(tmp_path):
    gmap = generator_snapshot(8, 1, seed=4).generator_map
    path = tmp_path / "report.json"
    emit_generator_report(gmap, path)
    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["n"] == 8
    assert report["memory_count"] == 1
    assert report["non_generator_fraction"] == 0.0
    assert report["per_memory_generator_fractions"] == [1.0]
    assert report["retrieved_count"] == 1
    assert len(report["records"]) == 16
    assert {r["memory"] for r in report["records"]} == {1, None}


def test_report_empty_fed():
    report = build_generator_report(GeneratorMap(5, 0, (1, -1), {}))
    assert report["per_memory_generator_fractions"] == []
    assert report["retrieved_count"] == 0
    assert all(r["memory"] is None for r in report["records"])


def test_memory_file_parsing(tmp_path):
    text = "# 两条记忆\n\n++--\n+-+-\n"
    memories = parse_memories(text)
    assert [m.to_string() for m in memories] == ["++--", "+-+-"]
    assert format_memories(memories) == "++--\n+-+-\n"

    with pytest.raises(SizingError):
        parse_memories("++--\n+-+\n")

    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n", encoding="utf-8")
    with pytest.raises(SizingError):
        read_memories(empty)


def test_memory_file_vectors_are_bipolar():
    memories = parse_memories("+-+\n")
    assert isinstance(memories[0], BipolarVector)
    assert np.array_equal(memories[0].values, np.array([1, -1, 1]))


def main():
    """运行所有测试"""
    test_capacity_csv_single_memory_row()
    test_capacity_csv_rows_and_parse()
    test_svg_has_one_vertex_per_neuron()
    test_svg_single_memory_is_single_colored()
    test_report_empty_fed()
    test_memory_file_parsing(Path(tempfile.mkdtemp()))
    print("\n报告输出测试完成 ✅")


if __name__ == "__main__":
    main()
