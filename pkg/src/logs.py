"""
统一日志输出

沿用 `[模块][级别] 消息` 的打印格式，但全部写到 stderr，
这样 CLI 的 stdout 只留给结果（检索向量、更新顺序等）。

级别阈值来自环境变量 BMATRIX_LOG_LEVEL（DEBUG / INFO / WARN / ERROR），默认 INFO。
"""

from __future__ import annotations

import os
import sys
from typing import Callable

LEVELS = {"DEBUG": 10, "INFO": 20, "WARN": 30, "ERROR": 40}

LogFn = Callable[..., None]


def _threshold() -> int:
    name = os.getenv("BMATRIX_LOG_LEVEL", "INFO").strip().upper()
    return LEVELS.get(name, LEVELS["INFO"])


def get_logger(tag: str) -> LogFn:
    """
    返回一个 `_log(msg, level="INFO")` 函数

    用法：
        _log = get_logger("Experiment")
        _log("开始实验")
        _log("预设缺失", "WARN")
    """

    def _log(msg: str, level: str = "INFO") -> None:
        if LEVELS.get(level, LEVELS["INFO"]) < _threshold():
            return
        print(f"[{tag}][{level}] {msg}", file=sys.stderr)

    return _log
