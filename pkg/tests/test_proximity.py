"""
邻近矩阵与更新顺序测试

覆盖：
1. 公平邻近矩阵的结构（对称、零对角、界、规范链）
2. row-sort 复现示例顺序 [2 5 3 1 4 6]
3. 平局按编号打破、greedy-chain 策略
4. 任意矩阵、任意起点、两种策略都给出合法排列
5. 矩阵文件往返
"""

import sys
from pathlib import Path

import numpy as np
import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.errors import ConfigError, NeuronIndexError, PermutationError, SizingError
from src.network import ProximityMatrix, UpdateOrder, generate_fair_proximity, update_order
from src.tools.matrix_file import format_proximity, parse_proximity, read_proximity, write_proximity


def example_matrix() -> ProximityMatrix:
    """第 2 行为 [3, 0, 2, 4, 1, 5] 的对称矩阵，其他位置随便填"""
    P = np.full((6, 6), 2.5)
    np.fill_diagonal(P, 0.0)
    row = np.array([3.0, 0.0, 2.0, 4.0, 1.0, 5.0])
    P[1, :] = row
    P[:, 1] = row
    return ProximityMatrix(P)


def random_symmetric(n: int, rng: np.random.Generator) -> ProximityMatrix:
    A = rng.uniform(0.0, n, size=(n, n))
    A = np.triu(A, 1)
    return ProximityMatrix(A + A.T)


def test_fair_matrix_structure_n6():
    for seed in range(10):
        P = generate_fair_proximity(6, np.random.default_rng(seed))
        assert np.array_equal(P.entries, P.entries.T)
        assert np.all(np.diagonal(P.entries) == 0)
        assert P.entries[0, 1] == pytest.approx(3.0)
        assert P.entries[0, 5] == pytest.approx(3 + 4 / 6)
        assert 3 <= P.entries[0, 5] < 4
        assert update_order(P, 1).order == (1, 2, 3, 4, 5, 6)
        assert P.is_fair()


def test_fair_matrix_bounds_n1024():
    P = generate_fair_proximity(1024, np.random.default_rng(2024))
    off = ~np.eye(1024, dtype=bool)
    assert P.entries[off].max() < 1023
    assert P.entries[off].min() > 0


def test_fair_matrix_rejects_small_n():
    with pytest.raises(SizingError):
        generate_fair_proximity(1, np.random.default_rng(0))


def test_canonical_chain_identity_for_every_seed():
    for seed in range(50):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 40))
        P = generate_fair_proximity(n, rng)
        assert update_order(P, 1, "row-sort") == UpdateOrder.identity(n)


def test_naive_mode_keeps_chain_order():
    for seed in range(20):
        P = generate_fair_proximity(12, np.random.default_rng(seed), mode="naive")
        assert update_order(P, 1).order == tuple(range(1, 13))


def test_row_sort_reference_order():
    order = update_order(example_matrix(), 2, "row-sort")
    assert order.order == (2, 5, 3, 1, 4, 6)
    assert order.start == 2
    print(f"✓ 从 2 号神经元出发: [{order}]")


def test_tie_break_by_smaller_index():
    n = 8
    P = np.ones((n, n))
    np.fill_diagonal(P, 0.0)
    order = update_order(ProximityMatrix(P), 3, "row-sort")
    assert order.order == (3, 1, 2, 4, 5, 6, 7, 8)


def test_greedy_chain_follows_nearest_neighbour():
    # 链 1-3-2-4：相邻的距离为 1，其余为 9
    P = np.full((4, 4), 9.0)
    np.fill_diagonal(P, 0.0)
    for a, b in [(0, 2), (2, 1), (1, 3)]:
        P[a, b] = P[b, a] = 1.0
    order = update_order(ProximityMatrix(P), 1, "greedy-chain")
    assert order.order == (1, 3, 2, 4)
    # row-sort 只看起点那一行：3 最近，其余平局按编号
    assert update_order(ProximityMatrix(P), 1, "row-sort").order == (1, 3, 2, 4)
    assert update_order(ProximityMatrix(P), 4, "row-sort").order == (4, 2, 1, 3)
    assert update_order(ProximityMatrix(P), 4, "greedy-chain").order == (4, 2, 3, 1)


def test_update_order_errors():
    P = example_matrix()
    with pytest.raises(NeuronIndexError):
        update_order(P, 0)
    with pytest.raises(NeuronIndexError):
        update_order(P, 7)
    with pytest.raises(ConfigError):
        update_order(P, 1, "spiral")


def test_update_order_is_always_a_permutation():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(2, 20))
        P = random_symmetric(n, rng)
        for strategy in ("row-sort", "greedy-chain"):
            for start in range(1, n + 1):
                order = update_order(P, start, strategy)
                assert sorted(order.order) == list(range(1, n + 1))
                assert order.start == start
                # 相同输入，相同输出
                assert update_order(P, start, strategy) == order


def test_update_order_validates_permutation():
    with pytest.raises(PermutationError):
        UpdateOrder((1, 1, 2))
    with pytest.raises(PermutationError):
        UpdateOrder((0, 1, 2))


def test_matrix_file_round_trip(tmp_path):
    P = generate_fair_proximity(9, np.random.default_rng(77))
    path = tmp_path / "p.txt"
    write_proximity(P, path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "9"
    assert len(text.splitlines()) == 10
    assert read_proximity(path) == P
    assert parse_proximity(format_proximity(P)) == P


def test_matrix_file_rejects_bad_shape():
    with pytest.raises(SizingError):
        parse_proximity("3\n0 1 2\n1 0 2\n")
    with pytest.raises(SizingError):
        parse_proximity("2\n0 1\n1 0 5\n")


def main():
    """运行所有测试"""
    test_fair_matrix_structure_n6()
    test_canonical_chain_identity_for_every_seed()
    test_row_sort_reference_order()
    test_tie_break_by_smaller_index()
    test_greedy_chain_follows_nearest_neighbour()
    test_update_order_is_always_a_permutation()
    print("\n邻近矩阵测试完成 ✅")


if __name__ == "__main__":
    main()
