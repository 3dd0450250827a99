"""
实验用例：批量随机实验与统计导出
"""
