from __future__ import annotations

"""
memory_file：记忆文件格式

每行一条记忆，由 '+' / '-' 组成，长度为 n；空行和 # 开头的注释行忽略。
例如：
    # 8 个神经元，两条记忆
    ++--+-+-
    +-+-+-+-
"""

from pathlib import Path
from typing import List, Sequence, Union

from ..errors import SizingError
from ..network import BipolarVector
from .sink import Sink, write_text


def parse_memories(text: str) -> List[BipolarVector]:
    memories: List[BipolarVector] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        vector = BipolarVector.from_string(line)
        if memories and vector.n != memories[0].n:
            raise SizingError(f"第 {lineno} 行长度 {vector.n} 与第一条记忆长度 {memories[0].n} 不一致")
        memories.append(vector)
    return memories


def read_memories(path: Union[str, Path]) -> List[BipolarVector]:
    with open(path, "r", encoding="utf-8") as f:
        memories = parse_memories(f.read())
    if not memories:
        raise SizingError(f"记忆文件中没有任何记忆: {path}")
    return memories


def format_memories(memories: Sequence[BipolarVector]) -> str:
    return "".join(m.to_string() + "\n" for m in memories)


def write_memories(memories: Sequence[BipolarVector], sink: Sink) -> str:
    return write_text(sink, format_memories(memories))
