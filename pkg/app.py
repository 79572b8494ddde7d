"""
命令行入口 - B 矩阵 Hebbian 网络模拟器

职责：
1. 确保可以导入 src 模块
2. 把参数交给 src.cli.main，退出码原样返回

用法：
    python app.py experiment --neurons 64 --memories 40 --iterations 100 --seed 7 --out results/
    python app.py generators --neurons 16 --memories 4 --seed 3
    python app.py retrieve --memory-file mem.txt --start 1 --polarity +1
    python app.py proximity --neurons 6 --seed 1 --order-from 1
"""

import sys
from pathlib import Path

# 确保可以导入 src 模块
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
