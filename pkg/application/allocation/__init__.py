"""
分配用例：分配、比较、周期分析、Pareto 演示
"""
