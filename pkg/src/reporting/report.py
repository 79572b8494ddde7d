"""
report.py - 生成元结构化报告（JSON）

字段：
- n、memory_count、polarities
- non_generator_fraction：不生成任何记忆的神经元占比
- per_memory_generator_fractions：每条记忆的生成元占比（按喂入顺序）
- retrieved_count：至少有一个生成元的不同记忆个数
- records：每个 (neuron, polarity) 一条，memory 为 1 起始的记忆编号或 null

对外编号一律从 1 开始（神经元与记忆都是）。
"""

from __future__ import annotations

import json
from typing import List, Optional, TypedDict

from ..network import GeneratorMap
from ..tools.sink import Sink, write_text


class GeneratorRecord(TypedDict):
    neuron: int
    polarity: int
    memory: Optional[int]


class GeneratorReport(TypedDict):
    n: int
    memory_count: int
    polarities: List[int]
    non_generator_fraction: float
    per_memory_generator_fractions: List[float]
    retrieved_count: int
    records: List[GeneratorRecord]


def build_generator_report(gmap: GeneratorMap) -> GeneratorReport:
    records: List[GeneratorRecord] = []
    for neuron in range(1, gmap.n + 1):
        for polarity in gmap.polarities:
            memory = gmap.memory_for(neuron, polarity)
            records.append(
                {
                    "neuron": neuron,
                    "polarity": polarity,
                    "memory": memory + 1 if memory is not None else None,
                }
            )
    return {
        "n": gmap.n,
        "memory_count": gmap.memory_count,
        "polarities": list(gmap.polarities),
        "non_generator_fraction": gmap.non_generator_fraction,
        "per_memory_generator_fractions": gmap.per_memory_generator_fractions(),
        "retrieved_count": gmap.retrieved_count,
        "records": records,
    }


def render_generator_report(gmap: GeneratorMap) -> str:
    return json.dumps(build_generator_report(gmap), ensure_ascii=False, indent=2) + "\n"


def emit_generator_report(gmap: GeneratorMap, sink: Sink) -> str:
    return write_text(sink, render_generator_report(gmap))
