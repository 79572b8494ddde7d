from __future__ import annotations

"""
sink：统一的文本写出工具

所有报告（CSV / SVG / JSON / 矩阵文件）都先在内存里完整生成，再一次性写出：
- 目标是路径时：自动创建父目录，写入 UTF-8、LF 换行
- 目标是文本流时：直接 write
写入失败统一包装成 ReportIOError，带上路径。
"""

from pathlib import Path
from typing import IO, Union

from ..errors import ReportIOError

Sink = Union[str, Path, IO[str]]


def write_text(sink: Sink, text: str) -> str:
    if isinstance(sink, (str, Path)):
        path = Path(sink)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as e:
            raise ReportIOError(path, str(e)) from e
        return text

    try:
        sink.write(text)
    except OSError as e:
        raise ReportIOError(getattr(sink, "name", None), str(e)) from e
    return text
