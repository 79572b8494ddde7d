"""
graph.py - LangGraph 实验编排

作用：
定义一次容量曲线实验里各个节点如何连接、数据如何流转。
planner 把试验并行分发出去（Fan-out），所有 trial 完成后在 aggregator 汇总（Fan-in）。

流程图：
                    planner (校验 + 分发)
                   /    |     \\
             Send(trial, 0) ... Send(trial, I-1)   (并行)
                   \\    |     /
                      (汇聚点)
                        |
                    aggregator ---> END
"""

from __future__ import annotations

from langgraph.graph import END, StateGraph

from .nodes.aggregator import aggregator_node
from .nodes.planner import dispatch_trials, planner_node
from .nodes.trial import trial_node
from .state import ExperimentState


def build_graph():
    """
    构建 LangGraph 工作流

    步骤说明：
    1. 创建 StateGraph 实例，指定状态类型
    2. 添加 planner、trial、aggregator 三个节点
    3. planner 通过条件边 dispatch_trials 返回 Send 列表，实现并行分发
    4. 每个 trial 完成后都汇入 aggregator
    5. 编译并返回可执行的 graph
    """
    graph = StateGraph(ExperimentState)

    graph.add_node("planner", planner_node)
    graph.add_node("trial", trial_node)
    graph.add_node("aggregator", aggregator_node)

    graph.set_entry_point("planner")

    # Fan-out：每个 trial_index 一个 Send
    graph.add_conditional_edges("planner", dispatch_trials, ["trial"])

    # Fan-in：所有 trial 完成后才进入 aggregator
    graph.add_edge("trial", "aggregator")
    graph.add_edge("aggregator", END)

    return graph.compile()


# 导出编译好的 graph 实例，供 experiment.py 使用
app = build_graph()
