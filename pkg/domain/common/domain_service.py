from abc import ABC


class DomainService(ABC):
    """领域服务的基类。

    封装不属于任何值对象的领域逻辑；本项目中的分配器
    （DRF / PDRF / EDRF 的整数化）都以领域服务的形式暴露。
    子类应当无状态，同一实例可被并发调用。
    """

    name: str = ""

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
