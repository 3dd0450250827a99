"""
基础设施层

包含所有技术实现：
- config: 配置管理
- containers: 依赖注入容器
- mediator: CQRS 中介者
- behaviors: 验证与异常转换（退出码）
- logging: 日志系统
- serialization: 场景文件读取与结果编码
- export: 实验统计导出
"""
