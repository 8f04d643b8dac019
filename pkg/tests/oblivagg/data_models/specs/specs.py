from typing import Any, Callable, List, Optional, Type


class Spec:
    """Keyword arguments <spec> of a valid or invalid instance of <cls>."""

    def __init__(self, cls: Type, spec: Callable[[], dict]):
        self.cls = cls
        self.spec = spec

    def obj(self, **kwargs) -> Any:
        """Instantiate <cls>, <kwargs> overriding the spec."""
        return self.cls(**{**self.spec(), **kwargs})

    def typed_spec(self) -> dict:
        """The spec with the `type` discriminator, for models that carry one."""
        if "type" not in self.cls.__fields__:
            return self.spec()
        return {**self.spec(), "type": self.cls.__name__}

    def __repr__(self):
        return f"{self.cls.__name__}: {self.spec()}"


class Specs:
    """Valid specs plus the invalid variants derived from them.

    Every entry of <overwrites> maps a key to replacement values; each valid
    spec containing the key yields one invalid spec per replacement value.
    """

    def __init__(self, overwrites: Optional[dict] = None):
        self.overwrites = overwrites or {}
        self.valids: List[Spec] = []
        self.invalids: List[Spec] = []

    def _first(self, specs: List[Spec], cls: Optional[Type]) -> Spec:
        matches = [s for s in specs if cls is None or s.cls == cls]
        if len(matches) == 0:
            raise TypeError(f"no spec of type {getattr(cls, '__name__', cls)} found")
        return matches[0]

    def valid(self, cls: Optional[Type] = None) -> Spec:
        return self._first(self.valids, cls)

    def invalid(self, cls: Optional[Type] = None) -> Spec:
        return self._first(self.invalids, cls)

    def add_valid(self, cls: Type, spec: Callable[[], dict], add_invalids: bool = True) -> Spec:
        spec_ = Spec(cls, spec)
        self.valids.append(spec_)
        if add_invalids:
            data = spec()
            for key, values in self.overwrites.items():
                if key not in data:
                    continue
                for value in values:
                    self.invalids.append(
                        Spec(cls, lambda data=data, key=key, value=value: {**data, key: value})
                    )
        return spec_

    def add_invalid(self, cls: Type, spec: Callable[[], dict]) -> Spec:
        spec_ = Spec(cls, spec)
        self.invalids.append(spec_)
        return spec_
