"""
cli.py - 命令行入口

子命令：
    experiment  增量喂入蒙特卡洛实验，写出容量曲线 CSV（可选 PNG）
    generators  训练一个网络并扫描生成元，写出 SVG 多边形图 + JSON 报告
    retrieve    从指定神经元出发检索一条记忆，打印 ±1 串以及是否命中喂入记忆
    proximity   生成公平邻近矩阵并写出纯文本矩阵文件，可选打印更新顺序

使用方式：
    python app.py experiment --neurons 64 --memories 40 --iterations 100 --seed 7 --out results/
    python -m src.cli generators --preset generators-16 --seed 3
    python -m src.cli retrieve --memory-file mem.txt --start 1 --polarity +1
    python -m src.cli proximity --neurons 6 --seed 1 --order-from 1

退出码：0 成功；1 运行期 / I/O 失败；2 参数或校验失败。
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from .errors import (
    ConfigError,
    InvariantViolationError,
    NeuronIndexError,
    PermutationError,
    SizingError,
)
from .experiment import build_network, generator_snapshot, run_experiment
from .logs import get_logger
from .network import STRATEGIES, generate_fair_proximity, retrieve_from, train, update_order
from .reporting import PolygonLayout, emit_capacity_csv, emit_generator_report, emit_generator_svg, plot_capacity_curves
from .settings import ExperimentConfig, load_config_file, load_preset, resolve_seed
from .tools.matrix_file import read_proximity, write_proximity
from .tools.memory_file import read_memories

_log = get_logger("CLI")

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

DEFAULT_OUT = "results"

VALIDATION_ERRORS = (
    ConfigError,
    NeuronIndexError,
    SizingError,
    PermutationError,
    InvariantViolationError,
    ValidationError,
)

# 命令行参数名 -> ExperimentConfig 字段名
FLAG_TO_FIELD = {
    "neurons": "neurons",
    "memories": "memories",
    "iterations": "iterations",
    "order_strategy": "strategy",
    "polarity": "polarity_policy",
    "match_complement": "match_complement",
    "proximity_mode": "proximity_mode",
    "workers": "workers",
}


def _add_network_flags(parser: argparse.ArgumentParser, iterations: bool = False) -> None:
    parser.add_argument("--neurons", "-n", type=int, default=None, help="神经元个数 n（>= 2）")
    parser.add_argument("--memories", "-m", type=int, default=None, help="喂入记忆数 M（>= 1），默认 ⌈0.6n⌉")
    if iterations:
        parser.add_argument("--iterations", "-i", type=int, default=None, help="试验次数（>= 1），默认 100")
        parser.add_argument("--workers", type=int, default=None, help="并行 trial 的上限，默认 4")
    parser.add_argument("--seed", "-s", type=int, default=None, help="主种子，缺省时读环境变量 BMATRIX_SEED")
    parser.add_argument("--order-strategy", choices=STRATEGIES, default=None, help="更新顺序策略，默认 row-sort")
    parser.add_argument("--polarity", choices=("+1", "-1", "both"), default=None, help="起始极性，默认 both")
    parser.add_argument(
        "--match-complement",
        action="store_true",
        default=None,
        help="生成出记忆的补码也算检索成功",
    )
    parser.add_argument("--proximity-mode", choices=("fair", "naive"), default=None, help="邻近矩阵构造方式")
    parser.add_argument("--preset", default=None, help="内置预设名，例如 capacity-64 / generators-16")
    parser.add_argument("--config", type=Path, default=None, help="YAML 配置文件路径")
    parser.add_argument("--out", "-o", default=DEFAULT_OUT, help=f"输出目录，默认 {DEFAULT_OUT}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmatrix",
        description="Hebbian 反馈网络 B 矩阵单神经元检索模拟器",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例：
    python app.py experiment --neurons 64 --memories 40 --iterations 100 --seed 7
    python app.py generators --neurons 16 --memories 4 --seed 3
    python app.py retrieve --neurons 16 --memories 4 --seed 3 --start 5 --polarity +1
    python app.py proximity --neurons 6 --seed 1 --order-from 2
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("experiment", help="容量曲线实验")
    _add_network_flags(p_exp, iterations=True)
    p_exp.add_argument("--plot", action="store_true", help="同时写出 PNG 曲线图")

    p_gen = sub.add_parser("generators", help="生成元扫描与多边形图")
    _add_network_flags(p_gen)
    p_gen.add_argument("--memory-file", type=Path, default=None, help="记忆文件（每行一条 +/- 串）")

    p_ret = sub.add_parser("retrieve", help="从单个神经元检索")
    _add_network_flags(p_ret)
    p_ret.add_argument("--memory-file", type=Path, default=None, help="记忆文件（每行一条 +/- 串）")
    p_ret.add_argument("--proximity-file", type=Path, default=None, help="邻近矩阵文件，缺省时由种子生成")
    p_ret.add_argument("--start", type=int, required=True, help="起始神经元（1..n）")

    p_prox = sub.add_parser("proximity", help="生成公平邻近矩阵")
    p_prox.add_argument("--neurons", "-n", type=int, required=True, help="神经元个数 n（>= 2）")
    p_prox.add_argument("--seed", "-s", type=int, default=None, help="主种子，缺省时读环境变量 BMATRIX_SEED")
    p_prox.add_argument("--proximity-mode", choices=("fair", "naive"), default="fair", help="邻近矩阵构造方式")
    p_prox.add_argument("--order-strategy", choices=STRATEGIES, default="row-sort", help="更新顺序策略")
    p_prox.add_argument("--order-from", type=int, default=None, help="打印从该神经元出发的更新顺序")
    p_prox.add_argument("--out", "-o", default=DEFAULT_OUT, help=f"输出目录，默认 {DEFAULT_OUT}")

    return parser


def build_config(args: argparse.Namespace, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    合并配置：预设 < 配置文件 < 命令行显式参数

    种子优先级：--seed > 预设/配置文件里的 master_seed > BMATRIX_SEED > 0
    """
    data: Dict[str, Any] = {}
    if getattr(args, "preset", None):
        data.update(load_preset(args.preset))
    if getattr(args, "config", None):
        data.update(load_config_file(args.config))
    for flag, field_name in FLAG_TO_FIELD.items():
        value = getattr(args, flag, None)
        if value is not None:
            data[field_name] = value
    if overrides:
        data.update(overrides)

    if args.seed is not None or "master_seed" not in data:
        data["master_seed"] = resolve_seed(args.seed)
    return ExperimentConfig(**data)


def cmd_experiment(args: argparse.Namespace) -> int:
    config = build_config(args)
    curves = run_experiment(config)

    out_dir = Path(args.out)
    stem = f"capacity_n{config.neurons}_m{config.memories}_i{config.iterations}_s{config.master_seed}"
    csv_path = out_dir / f"{stem}.csv"
    emit_capacity_csv(curves, csv_path)
    _log(f"容量曲线已写出: {csv_path}")

    if args.plot:
        plot_capacity_curves(
            curves,
            out_dir / f"{stem}.png",
            title=f"{config.neurons} Neurons and {config.iterations} Iterations",
        )
    return EXIT_OK


def cmd_generators(args: argparse.Namespace) -> int:
    memories = read_memories(args.memory_file) if args.memory_file else None
    overrides: Dict[str, Any] = {}
    if memories is not None:
        if args.neurons is not None and args.neurons != memories[0].n:
            raise SizingError(f"--neurons {args.neurons} 与记忆文件长度 {memories[0].n} 不一致")
        overrides = {"neurons": memories[0].n, "memories": len(memories)}
    config = build_config(args, overrides)

    snapshot = generator_snapshot(
        config.neurons,
        config.memories,
        config.master_seed,
        config.strategy,
        polarities=config.polarities,
        match_complement=config.match_complement,
        proximity_mode=config.proximity_mode,
        memories=memories,
    )

    out_dir = Path(args.out)
    stem = f"generators_n{config.neurons}_m{config.memories}_s{config.master_seed}"
    gmap = snapshot.generator_map
    emit_generator_svg(gmap, PolygonLayout(config.neurons), out_dir / f"{stem}.svg")
    emit_generator_report(gmap, out_dir / f"{stem}.json")
    _log(f"生成元图与报告已写出: {out_dir / stem}.svg / .json")
    _log(
        f"非生成元占比 {gmap.non_generator_fraction:.4f}, "
        f"单条记忆最高生成元占比 {max(gmap.per_memory_generator_fractions(), default=0.0):.4f}"
    )
    return EXIT_OK


def cmd_retrieve(args: argparse.Namespace) -> int:
    if args.memory_file:
        fed = read_memories(args.memory_file)
        if args.neurons is not None and args.neurons != fed[0].n:
            raise SizingError(f"--neurons {args.neurons} 与记忆文件长度 {fed[0].n} 不一致")
        config = build_config(args, {"neurons": fed[0].n, "memories": len(fed)})
    else:
        config = build_config(args)
        _, fed = build_network(config.neurons, config.memories, config.master_seed, config.proximity_mode)

    if args.proximity_file:
        P = read_proximity(args.proximity_file)
    else:
        P, _ = build_network(config.neurons, 0, config.master_seed, config.proximity_mode)
    if P.n != config.neurons:
        raise SizingError(f"邻近矩阵规模 {P.n} 与网络规模 {config.neurons} 不一致")
    if not 1 <= args.start <= config.neurons:
        raise NeuronIndexError(f"--start {args.start} 越界，应在 1..{config.neurons} 之间")

    T = train(fed, config.neurons)
    for polarity in config.polarities:
        vector = retrieve_from(T, P, args.start, polarity, config.strategy)
        line = f"{vector.to_string()} match=false"
        for index, memory in enumerate(fed, 1):
            if vector == memory:
                line = f"{vector.to_string()} match=true memory={index}"
                break
            if config.match_complement and vector == -memory:
                line = f"{vector.to_string()} match=true memory={index} complement=true"
                break
        print(line)
    return EXIT_OK


def cmd_proximity(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    if args.order_from is not None and not 1 <= args.order_from <= max(args.neurons, 1):
        raise NeuronIndexError(f"--order-from {args.order_from} 越界，应在 1..{args.neurons} 之间")
    P = generate_fair_proximity(args.neurons, np.random.default_rng(seed), args.proximity_mode)

    path = Path(args.out) / f"proximity_n{args.neurons}_s{seed}.txt"
    write_proximity(P, path)
    _log(f"邻近矩阵已写出: {path}")

    if args.order_from is not None:
        print(update_order(P, args.order_from, args.order_strategy))
    return EXIT_OK


COMMANDS = {
    "experiment": cmd_experiment,
    "generators": cmd_generators,
    "retrieve": cmd_retrieve,
    "proximity": cmd_proximity,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    命令行入口

    参数解析失败时 argparse 自己打印用法并给出退出码 2，这里把它转成返回值。
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except VALIDATION_ERRORS as e:
        print(parser.format_usage(), end="", file=sys.stderr)
        _log(f"参数校验失败: {e}", "ERROR")
        return EXIT_USAGE
    except OSError as e:
        _log(f"I/O 失败: {e}", "ERROR")
        return EXIT_RUNTIME
    except Exception as e:
        _log(f"运行失败: {type(e).__name__}: {e}", "ERROR")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
