"""
工具箱 - 专门负责"读写文件"的函数

- sink：统一的文本写出（路径或文本流），失败时带路径报错
- matrix_file：邻近矩阵的纯文本格式（第一行 n，之后 n 行数值）
- memory_file：记忆文件（每行一条 +/- 串）
"""

from src.tools.matrix_file import format_proximity, parse_proximity, read_proximity, write_proximity
from src.tools.memory_file import format_memories, parse_memories, read_memories, write_memories
from src.tools.sink import write_text

__all__ = [
    "write_text",
    "format_proximity",
    "parse_proximity",
    "read_proximity",
    "write_proximity",
    "format_memories",
    "parse_memories",
    "read_memories",
    "write_memories",
]
