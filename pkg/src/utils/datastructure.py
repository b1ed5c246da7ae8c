from enum import Enum
from typing import Any


class MultiValueIntEnum(int, Enum):
    """Integer member with a human readable label."""
    def __new__(cls, value: int, label: str):
        obj = int.__new__(cls, value)
        obj._value_ = value
        obj.label = label
        return obj

    label: str


class MultiValueStrEnum(str, Enum):
    """String member whose label carries the object it names."""
    def __new__(cls, value: str, label: Any):
        obj = str.__new__(cls, value)
        obj._value_ = value
        obj.label = label
        return obj

    label: Any

    @classmethod
    def values(cls) -> list[str]:
        return [member.value for member in cls]
