"""
应用层（Application Layer）

每个用例一个文件：请求模型（pydantic）+ 结果 + @Mediator.handler 处理器。
- allocation/commands: AllocateScenarioCommand
- allocation/queries: CompareAllocationsQuery, AnalyzeCyclesQuery, ParetoDemoQuery
- experiments/commands: RunBenchmarkCommand
"""
