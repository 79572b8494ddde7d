"""
实验配置管理模块

为什么存在？
统一管理一次模拟所需的全部参数：网络规模、喂入记忆数、迭代次数、主种子、
更新顺序策略、起始极性策略等，确保：
- 所有数值参数在执行前就完成校验（pydantic）
- 种子来源清晰：--seed > 环境变量 BMATRIX_SEED > 默认 0
- 常用规模的实验可以用 YAML 预设一键复现（src/presets/*.yaml）
"""

from __future__ import annotations

import math
import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import ConfigError
from .logs import get_logger

_log = get_logger("Settings")

# 加载 .env 文件中的环境变量
try:
    from dotenv import load_dotenv

    # 查找项目根目录的 .env 文件
    env_path = Path(__file__).parent.parent / ".env"
    if env_path.exists():
        load_dotenv(env_path)
except ImportError:
    # 如果没有安装 python-dotenv，使用系统环境变量
    pass


StrategyName = Literal["row-sort", "greedy-chain"]
PolarityPolicy = Literal["+1", "-1", "both"]
ProximityMode = Literal["fair", "naive"]

SEED_ENV_VAR = "BMATRIX_SEED"
MAX_SEED = 2**64
PRESET_DIR = Path(__file__).parent / "presets"


def default_memory_count(neurons: int) -> int:
    """⌈0.6·n⌉，上限 2n：覆盖容量曲线先升后降的峰值区间"""
    return min(math.ceil(0.6 * neurons), 2 * neurons)


def polarities_for(policy: str) -> Tuple[int, ...]:
    """把极性策略翻译成实际尝试的起始极性，both 固定先 +1 后 -1"""
    if policy == "+1":
        return (1,)
    if policy == "-1":
        return (-1,)
    if policy == "both":
        return (1, -1)
    raise ConfigError(f"未知极性策略: {policy!r}（可选 +1 / -1 / both）")


class ExperimentConfig(BaseModel):
    """
    一次增量喂入蒙特卡洛实验的完整配置

    对象创建后不可修改（frozen），可以安全地在并行的 trial 节点之间共享。
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    neurons: int = Field(..., ge=2, description="神经元个数 n")
    memories: Optional[int] = Field(None, ge=1, description="最多喂入的记忆数 M")
    iterations: int = Field(100, ge=1, description="独立重复次数")
    master_seed: int = Field(0, ge=0, lt=MAX_SEED)
    strategy: StrategyName = "row-sort"
    polarity_policy: PolarityPolicy = "both"
    match_complement: bool = False
    proximity_mode: ProximityMode = "fair"
    workers: int = Field(4, ge=1, description="trial 节点的最大并发数")

    @model_validator(mode="before")
    @classmethod
    def _fill_memory_default(cls, data: Any) -> Any:
        # neurons 本身的合法性交给字段校验，这里只在它是正整数时补默认值
        if isinstance(data, dict) and data.get("memories") is None:
            neurons = data.get("neurons")
            if isinstance(neurons, int) and neurons >= 1:
                data = {**data, "memories": default_memory_count(neurons)}
        return data

    @property
    def polarities(self) -> Tuple[int, ...]:
        return polarities_for(self.polarity_policy)


def resolve_seed(cli_seed: Optional[int]) -> int:
    """
    决定本次运行使用的主种子

    优先级：命令行 --seed > 环境变量 BMATRIX_SEED > 0
    """
    if cli_seed is not None:
        seed = cli_seed
    else:
        raw = os.getenv(SEED_ENV_VAR, "").strip()
        if not raw:
            return 0
        try:
            seed = int(raw)
        except ValueError:
            raise ConfigError(f"{SEED_ENV_VAR} 必须是整数，实际: {raw!r}")
        _log(f"使用环境变量 {SEED_ENV_VAR}={seed}")

    if not 0 <= seed < MAX_SEED:
        raise ConfigError(f"种子必须落在 [0, 2^64) 内，实际: {seed}")
    return seed


def load_config_file(path: Path) -> Dict[str, Any]:
    """读取 YAML 配置文件，返回原始字段字典（交给 ExperimentConfig 校验）"""
    if not path.exists():
        raise ConfigError(f"配置文件不存在: {path}")

    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    if not isinstance(data, dict):
        raise ConfigError(f"配置文件顶层必须是映射: {path}")
    return data


def list_presets() -> list[str]:
    return sorted(p.stem for p in PRESET_DIR.glob("*.yaml"))


def load_preset(name: str) -> Dict[str, Any]:
    """
    加载内置预设，例如 capacity-64 / generators-16

    预设只是一份默认值，命令行显式给出的参数会覆盖它。
    """
    path = PRESET_DIR / f"{name}.yaml"
    if not path.exists():
        raise ConfigError(f"未知预设 {name!r}，可用: {', '.join(list_presets())}")
    data = load_config_file(path)
    data.pop("description", None)
    return data
