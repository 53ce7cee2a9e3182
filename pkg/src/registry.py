"""
Identity registry for hooklab

Each registered identity has:
1. A verifier - callable(target, options) returning a VerificationReport
2. A target kind - what the verifier runs on ("straight", "skew", "perm", "size")
3. Modes - evaluation modes it supports, the first one being its default
4. A sweep generator - the targets `sweep --max-size n` runs it on
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from errors import ConfigError
from log import debug

TARGET_KINDS = ("straight", "skew", "perm", "size")


@dataclass(frozen=True)
class IdentitySpec:
    identity_id: str
    verifier: Callable
    kind: str
    modes: Tuple[str, ...]
    description: str
    sweep: Optional[Callable[[int], Iterable]] = None

    @property
    def default_mode(self) -> str:
        return self.modes[0]


class IdentityRegistry:
    """Registry for the identities hooklab knows how to verify"""

    def __init__(self):
        self.identities: Dict[str, IdentitySpec] = {}

    def register_identity(self, identity_id: str, verifier: Callable, kind: str,
                          modes: Iterable[str], description: str,
                          sweep: Optional[Callable[[int], Iterable]] = None):
        """Register a verifier under an identity id

        Args:
            identity_id: Short id used on the command line (e.g. 'khlf')
            verifier: Function taking (target, options) and returning a VerificationReport
            kind: One of TARGET_KINDS
            modes: Supported evaluation modes, default first
            description: One line shown by `hooklab list`
            sweep: Function mapping a max size to the targets a sweep runs on
        """
        if not callable(verifier):
            raise ValueError("verifier must be callable")
        if kind not in TARGET_KINDS:
            raise ValueError(f"Unknown target kind {kind!r}")
        modes = tuple(modes)
        if not modes:
            raise ValueError("At least one mode is required")
        self.identities[identity_id] = IdentitySpec(identity_id, verifier, kind, modes,
                                                    description, sweep)
        debug(f"Registered identity: {identity_id} ({kind}, {', '.join(modes)})")

    def identity(self, identity_id: str, kind: str, modes: Iterable[str], description: str,
                 sweep: Optional[Callable[[int], Iterable]] = None):
        """Decorator form of register_identity"""
        def wrap(fn):
            self.register_identity(identity_id, fn, kind, modes, description, sweep)
            return fn
        return wrap

    def get_identity(self, identity_id: str) -> IdentitySpec:
        try:
            return self.identities[identity_id]
        except KeyError:
            raise ConfigError(f"Unknown identity id {identity_id!r}",
                              {"known": sorted(self.identities)}) from None

    def select(self, ids: Iterable[str]) -> List[IdentitySpec]:
        """Resolve a list of ids; 'all' selects every identity that has a sweep"""
        ids = list(ids)
        if not ids or "all" in ids:
            return [s for _, s in sorted(self.identities.items()) if s.sweep is not None]
        return [self.get_identity(i) for i in ids]

    def clear_identities(self, identity_id: Optional[str] = None):
        if identity_id:
            self.identities.pop(identity_id, None)
        else:
            self.identities.clear()

    def list_identities(self) -> List[Tuple[str, str, str, str]]:
        """(id, kind, modes, description) rows sorted by id"""
        return [(s.identity_id, s.kind, ",".join(s.modes), s.description)
                for _, s in sorted(self.identities.items())]
