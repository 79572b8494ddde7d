"""
单神经元生成式检索测试

覆盖：
1. permute_T 的重新标号
2. spread：全零 B、单记忆网络、前缀不变、极性反号
3. retrieve_from：任意起点的单记忆完备性、起点被钳住
4. scan_generators：单记忆、空喂入、补码匹配、统计量
"""

import sys
from pathlib import Path

import numpy as np
import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.errors import ConfigError, PermutationError, SizingError
from src.network import (
    BipolarVector,
    BMatrix,
    GeneratorMap,
    TMatrix,
    UpdateOrder,
    generate_fair_proximity,
    lower_triangular,
    permute_T,
    retrieve_from,
    scan_generators,
    spread,
    spread_instrumented,
    train,
    update_order,
)


def random_network(n: int, M: int, rng: np.random.Generator):
    fed = [BipolarVector.random(n, rng) for _ in range(M)]
    return train(fed), fed


def brute_force_spread(B: np.ndarray, start: int) -> list:
    """逐分量手算的参考扩散"""
    f = [start]
    for i in range(1, B.shape[0]):
        total = sum(int(B[i][j]) * f[j] for j in range(i))
        f.append(1 if total >= 0 else -1)
    return f


def test_permute_identity_and_symmetry():
    rng = np.random.default_rng(1)
    T, _ = random_network(7, 3, rng)
    assert permute_T(T, UpdateOrder.identity(7)) == T

    T2 = TMatrix(np.array([[0, 5], [5, 0]]), 5)
    assert permute_T(T2, UpdateOrder((2, 1))) == T2


def test_permute_relabel_oracle():
    rng = np.random.default_rng(2)
    T, _ = random_network(4, 3, rng)
    order = UpdateOrder((3, 1, 4, 2))
    Tp = permute_T(T, order)
    for a in range(4):
        for b in range(4):
            assert Tp.entries[a, b] == T.entries[order.order[a] - 1, order.order[b] - 1]
    # T′[1][2] = T[3][1]（1 起始编号）
    assert Tp.entries[0, 1] == T.entries[2, 0]


def test_permute_rejects_size_mismatch():
    with pytest.raises(PermutationError):
        permute_T(TMatrix.zeros(3), UpdateOrder((1, 2)))
    with pytest.raises(PermutationError):
        permute_T(TMatrix.zeros(3), (1, 1, 2))


def test_spread_on_zero_matrix():
    for n in (2, 5, 17):
        B = BMatrix(np.zeros((n, n), dtype=np.int64))
        assert spread(B, 1).tolist() == [1] * n
        assert spread(B, -1).tolist() == [-1] + [1] * (n - 1)


def test_spread_rejects_bad_polarity():
    with pytest.raises(ConfigError):
        spread(BMatrix(np.zeros((3, 3), dtype=np.int64)), 0)


def test_spread_single_memory_canonical_order():
    rng = np.random.default_rng(4)
    for n in range(2, 33):
        m = BipolarVector.random(n, rng)
        B = lower_triangular(train([m]))
        assert spread(B, int(m[0])) == m
        assert spread(B, -int(m[0])) == -m


def test_spread_matches_brute_force():
    rng = np.random.default_rng(6)
    for _ in range(50):
        n = int(rng.integers(2, 17))
        T, _ = random_network(n, int(rng.integers(1, 6)), rng)
        B = lower_triangular(T)
        for p in (1, -1):
            assert spread(B, p).tolist() == brute_force_spread(B.entries, p)


def test_prefix_preservation_instrumented():
    """100 个随机网络：每一步的片段都是上一步片段的延伸"""
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = int(rng.integers(2, 65))
        T, _ = random_network(n, int(rng.integers(1, 21)), rng)
        B = lower_triangular(T)
        for p in (1, -1):
            trace = spread_instrumented(B, p)
            assert len(trace.fragments) == n
            for i in range(1, n):
                assert trace.fragments[i][:i] == trace.fragments[i - 1]
            assert trace.vector == spread(B, p)


def test_polarity_antisymmetry_without_zero_sums():
    rng = np.random.default_rng(21)
    checked = 0
    for _ in range(200):
        n = int(rng.integers(2, 33))
        T, _ = random_network(n, int(rng.integers(1, 8)), rng)
        B = lower_triangular(T)
        plus = spread_instrumented(B, 1)
        if plus.zero_sum:
            continue
        checked += 1
        assert spread(B, -1) == -plus.vector
    assert checked > 0


def test_single_memory_completeness_all_starts():
    """n = 2..64，每个起点：极性与记忆一致时得到 m，相反时得到 −m"""
    rng = np.random.default_rng(64)
    for n in range(2, 65):
        m = BipolarVector.random(n, rng)
        T = train([m])
        P = generate_fair_proximity(n, rng)
        for k in range(1, n + 1):
            assert retrieve_from(T, P, k, int(m[k - 1])) == m, f"n={n}, start={k}"
            assert retrieve_from(T, P, k, -int(m[k - 1])) == -m, f"n={n}, start={k}"


def test_retrieve_from_neuron_one_matches_plain_spread():
    rng = np.random.default_rng(30)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        T, _ = random_network(n, 4, rng)
        P = generate_fair_proximity(n, rng)
        B = lower_triangular(T)
        for p in (1, -1):
            assert retrieve_from(T, P, 1, p) == spread(B, p)


def test_retrieve_from_clamps_start_neuron():
    rng = np.random.default_rng(8)
    T, _ = random_network(8, 2, rng)
    P = generate_fair_proximity(8, rng)
    for strategy in ("row-sort", "greedy-chain"):
        for k in range(1, 9):
            for p in (1, -1):
                assert retrieve_from(T, P, k, p, strategy)[k - 1] == p


def test_retrieve_from_follows_update_order():
    """手工按顺序重排、扩散、逆排列，与 retrieve_from 一致"""
    rng = np.random.default_rng(13)
    T, _ = random_network(10, 3, rng)
    P = generate_fair_proximity(10, rng)
    order = update_order(P, 4)
    f = brute_force_spread(lower_triangular(permute_T(T, order)).entries, -1)
    expected = [0] * 10
    for position, neuron in enumerate(order.order):
        expected[neuron - 1] = f[position]
    assert retrieve_from(T, P, 4, -1).tolist() == expected


def test_retrieve_from_size_mismatch():
    with pytest.raises(SizingError):
        retrieve_from(TMatrix.zeros(4), generate_fair_proximity(5, np.random.default_rng(0)), 1, 1)


def test_scan_single_memory_all_generators():
    rng = np.random.default_rng(5)
    m = BipolarVector.random(12, rng)
    gmap = scan_generators(train([m]), generate_fair_proximity(12, rng), [m])
    assert gmap.retrieved_count == 1
    assert gmap.non_generator_fraction == 0.0
    assert gmap.generator_neurons() == list(range(1, 13))
    assert gmap.per_memory_generator_fractions() == [1.0]
    # 与记忆符号相反的起始极性生成补码，默认不算命中
    for k in range(1, 13):
        assert gmap.memory_for(k, int(m[k - 1])) == 0
        assert gmap.memory_for(k, -int(m[k - 1])) is None


def test_scan_match_complement():
    rng = np.random.default_rng(5)
    m = BipolarVector.random(12, rng)
    gmap = scan_generators(
        train([m]), generate_fair_proximity(12, rng), [m], match_complement=True
    )
    assert all(gmap.memory_for(k, p) == 0 for k in range(1, 13) for p in (1, -1))


def test_scan_single_polarity():
    rng = np.random.default_rng(5)
    m = BipolarVector.random(6, rng)
    gmap = scan_generators(train([m]), generate_fair_proximity(6, rng), [m], polarities=(1,))
    assert gmap.polarities == (1,)
    generators = [k for k in range(1, 7) if m[k - 1] == 1]
    assert gmap.generator_neurons() == generators
    assert gmap.non_generator_fraction == pytest.approx(1 - len(generators) / 6)


def test_scan_empty_fed():
    P = generate_fair_proximity(6, np.random.default_rng(0))
    gmap = scan_generators(TMatrix.zeros(6), P, [])
    assert gmap.retrieved_count == 0
    assert gmap.per_memory_generator_fractions() == []
    assert gmap.generator_neurons() == []


def test_scan_duplicate_memory_maps_to_first_index():
    rng = np.random.default_rng(9)
    m = BipolarVector.random(8, rng)
    gmap = scan_generators(train([m, m]), generate_fair_proximity(8, rng), [m, m])
    assert gmap.retrieved_count == 1
    assert gmap.per_memory_generator_fractions() == [1.0, 0.0]


def test_scan_statistics_match_direct_retrieval():
    """非生成元占比 = 不生成任何喂入记忆的神经元数 / n"""
    rng = np.random.default_rng(16)
    fed = [BipolarVector.random(16, rng) for _ in range(4)]
    T = train(fed)
    P = generate_fair_proximity(16, rng)
    gmap = scan_generators(T, P, fed)

    non_generators = 0
    hits = set()
    for k in range(1, 17):
        found = False
        for p in (1, -1):
            out = retrieve_from(T, P, k, p)
            matches = [i for i, x in enumerate(fed) if x == out]
            assert gmap.memory_for(k, p) == (matches[0] if matches else None)
            if matches:
                found = True
                hits.add(matches[0])
        non_generators += not found
    assert gmap.non_generator_fraction == pytest.approx(non_generators / 16)
    assert gmap.retrieved_count == len(hits)


def test_scan_with_precomputed_orders():
    rng = np.random.default_rng(17)
    fed = [BipolarVector.random(10, rng) for _ in range(3)]
    T = train(fed)
    P = generate_fair_proximity(10, rng)
    orders = [update_order(P, k) for k in range(1, 11)]
    assert scan_generators(T, P, fed, orders=orders) == scan_generators(T, P, fed)
    with pytest.raises(SizingError):
        scan_generators(T, P, fed, orders=orders[:5])


def test_scan_rejects_orders_for_wrong_start():
    rng = np.random.default_rng(18)
    fed = [BipolarVector.random(6, rng) for _ in range(2)]
    T = train(fed)
    P = generate_fair_proximity(6, rng)
    orders = [update_order(P, k) for k in range(1, 7)]
    orders[1], orders[2] = orders[2], orders[1]
    with pytest.raises(PermutationError):
        scan_generators(T, P, fed, orders=orders)
    with pytest.raises(PermutationError):
        scan_generators(T, P, fed, orders=[UpdateOrder.identity(6)] * 6)


def test_generator_map_lookup_helpers():
    gmap = GeneratorMap(3, 2, (1, -1), {(1, 1): 0, (1, -1): 1, (2, 1): None, (2, -1): None, (3, 1): 1, (3, -1): 1})
    assert gmap.memories_of(1) == [0, 1]
    assert gmap.memories_of(3) == [1]
    assert gmap.generator_neurons() == [1, 3]
    assert gmap.non_generator_fraction == pytest.approx(1 / 3)
    assert gmap.per_memory_generator_fractions() == pytest.approx([1 / 3, 2 / 3])


def main():
    """运行所有测试"""
    test_permute_relabel_oracle()
    test_spread_on_zero_matrix()
    test_prefix_preservation_instrumented()
    test_single_memory_completeness_all_starts()
    test_scan_single_memory_all_generators()
    test_scan_statistics_match_direct_retrieval()
    print("\n生成式检索测试完成 ✅")


if __name__ == "__main__":
    main()
