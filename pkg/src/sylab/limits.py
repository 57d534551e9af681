"""Configurable resource bounds.  Exceeding one raises ResourceLimit."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    classes: int = 200               # conjugacy classes per group
    table_order: int = 10**7         # |G| for character tables
    enumerate_order: int = 10**5     # classes by full orbit enumeration up to this order
    regular_quotient: int = 10**5    # |G:N| for the regular coset action
    radical_sylow: int = 3**6        # |P| for radical subgroup enumeration
    lemma21_quotient: int = 10**4    # coset counts enumerated by the lemma21 automizer check

    def with_(self, **kw):
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT = Limits()
