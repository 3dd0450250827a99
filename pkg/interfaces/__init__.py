"""
接口层

cli/: pdrf 命令，把参数转成 Command / Query 交给 Mediator，
再把结果或 ApplicationError 写到 stdout / stderr。
"""
