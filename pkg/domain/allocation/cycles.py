"""
DRF 主循环的周期结构

progressive filling 让所有用户的主导份额同步增长，因此主循环由周期构成：
一个完整周期让每个用户的已分配主导份额都增加 lcm(DS)，
用户 i 在周期内出现 lcm(DS) / ds_i 次。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from domain.common import DomainValidationException, InvalidOperationException

from .shares import ensure_valid, per_task_shares
from .value_objects import Rational, ResourceVector, Scenario, UserId


@dataclass(frozen=True)
class CycleProfile:
    """完整周期与基本子周期。

    full_length = Σ occurrences，occurrences[i] = lcm_ds / ds_i；
    basic_length = Σ basic_occurrences，basic_occurrences[i] = ⌊ds* / ds_i⌋。
    """

    full_length: int
    occurrences: Mapping[UserId, int]
    lcm_ds: Rational
    basic_length: int
    basic_occurrences: Mapping[UserId, int]
    max_share: Rational
    max_share_users: Tuple[UserId, ...]


@dataclass(frozen=True)
class SubcyclePattern:
    """一个用户在一个完整周期的各子周期中的额外出现位置。

    子周期按 1..subcycles 编号；ratio 的小数部分 f 决定额外出现：
    第 j 个子周期当 ⌈j·f⌉ > ⌈(j-1)·f⌉ 时多出现一次。
    gaps 为相邻额外出现的间隔（含跨到下一个周期的回绕）。
    """

    user_id: UserId
    ratio: Rational
    base: int
    subcycles: int
    extra_positions: Tuple[int, ...]
    gaps: Tuple[int, ...]


@dataclass(frozen=True)
class CycleLayer:
    active_users: Tuple[UserId, ...]
    occurrences: Mapping[UserId, int]
    basic_occurrences: Mapping[UserId, int]
    k: Rational
    iterations: int
    consumed: ResourceVector

    @property
    def deviates_from_basic(self) -> Tuple[UserId, ...]:
        """周期计数与 ⌊ds*/ds_i⌋ 不一致的用户"""
        return tuple(u for u in self.active_users if self.occurrences[u] != self.basic_occurrences[u])


@dataclass(frozen=True)
class CycleDecomposition:
    """高阶周期分解（实验性，仅供分析，不参与任何分配）"""

    layers: Tuple[CycleLayer, ...]
    residual: ResourceVector
    experimental: bool = True


def rational_lcm(values: Iterable[Rational]) -> Rational:
    """有理数最小公倍数：lcm(分子) / gcd(分母)，输入按最简分数处理"""
    fractions = [Fraction(v) for v in values]
    if not fractions:
        raise InvalidOperationException("rational_lcm", "empty value set")
    for value in fractions:
        if value <= 0:
            raise DomainValidationException("values", value, "must be positive")
    return Fraction(
        math.lcm(*(f.numerator for f in fractions)),
        math.gcd(*(f.denominator for f in fractions)),
    )


def cycle_profile(scenario: Scenario) -> CycleProfile:
    ensure_valid(scenario)
    shares = {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}
    lcm_ds = rational_lcm(shares.values())
    max_share = max(shares.values())

    occurrences: Dict[UserId, int] = {}
    for user_id, share in shares.items():
        count = lcm_ds / share
        assert count.denominator == 1
        occurrences[user_id] = count.numerator
    basic = {user_id: math.floor(max_share / share) for user_id, share in shares.items()}

    return CycleProfile(
        full_length=sum(occurrences.values()),
        occurrences=occurrences,
        lcm_ds=lcm_ds,
        basic_length=sum(basic.values()),
        basic_occurrences=basic,
        max_share=max_share,
        max_share_users=tuple(u for u, s in shares.items() if s == max_share),
    )


def subcycle_schedule(scenario: Scenario) -> Tuple[SubcyclePattern, ...]:
    """各用户在一个完整周期内的额外出现时刻（描述性输出）"""
    profile = cycle_profile(scenario)
    shares = {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}
    subcycles = (profile.lcm_ds / profile.max_share).numerator

    patterns: List[SubcyclePattern] = []
    for user_id, share in shares.items():
        ratio = profile.max_share / share
        base = math.floor(ratio)
        fractional = ratio - base
        positions = tuple(
            j for j in range(1, subcycles + 1)
            if math.ceil(j * fractional) > math.ceil((j - 1) * fractional)
        )
        gaps: Tuple[int, ...] = ()
        if positions:
            wrapped = positions + (positions[0] + subcycles,)
            gaps = tuple(b - a for a, b in zip(wrapped, wrapped[1:]))
        patterns.append(SubcyclePattern(user_id, ratio, base, subcycles, positions, gaps))
    return tuple(patterns)


def _chained_occurrences(shares: Mapping[UserId, Rational]) -> Dict[UserId, int]:
    """按主导份额降序逐级相乘的向下取整比例：最高份额为 1，
    下一级 = 上一级 × ⌊上一级份额 / 本级份额⌋。"""
    levels = sorted(set(shares.values()), reverse=True)
    count_at: Dict[Rational, int] = {levels[0]: 1}
    for higher, lower in zip(levels, levels[1:]):
        count_at[lower] = count_at[higher] * math.floor(higher / lower)
    return {user_id: count_at[share] for user_id, share in shares.items()}


def _layer_k(
    scenario: Scenario,
    shares: Mapping[UserId, Rational],
    residual: ResourceVector,
) -> Rational:
    """在剩余资源上对活跃用户重新计算周期迭代因子 k"""
    max_share = max(shares.values())
    best: Rational | None = None
    for index, available in enumerate(residual):
        column = sum(
            (max_share / share * scenario.user(user_id).demand[index] for user_id, share in shares.items()),
            Fraction(0),
        )
        if column == 0:
            continue
        ratio = Fraction(available) / column
        if best is None or ratio < best:
            best = ratio
    return best if best is not None else Fraction(0)


def decompose_higher_order(scenario: Scenario) -> CycleDecomposition:
    """逐层移除 ds* 用户，在剩余资源上寻找次级、三级……周期。

    第 0 层在全体用户上执行 ⌊k⌋ 次周期；之后每层先移除上一层的 ds* 用户
    （并列者一起移除）再重算 k。k < 1 的层以 0 次迭代记录、不消耗资源，
    继续移除 ds* 直到 k ≥ 1 或没有活跃用户。
    每次周期的占用按逐级取整的出现次数计算，并与 ⌊ds*/ds_i⌋ 并列给出。
    """
    ensure_valid(scenario)
    all_shares = {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}
    residual = scenario.resources
    active = list(scenario.user_ids)
    layers: List[CycleLayer] = []

    while active:
        shares = {u: all_shares[u] for u in active}
        k = _layer_k(scenario, shares, residual)
        iterations = math.floor(k)
        max_share = max(shares.values())
        occurrences = _chained_occurrences(shares)
        basic = {u: math.floor(max_share / s) for u, s in shares.items()}

        consumed = ResourceVector.zeros(scenario.n_resources)
        for user_id in active:
            consumed = consumed + scenario.user(user_id).demand.times(occurrences[user_id] * iterations)
        residual = residual - consumed

        layers.append(CycleLayer(
            active_users=tuple(active),
            occurrences=occurrences,
            basic_occurrences=basic,
            k=k,
            iterations=iterations,
            consumed=consumed,
        ))
        active = [u for u in active if shares[u] != max_share]

    return CycleDecomposition(layers=tuple(layers), residual=residual)
