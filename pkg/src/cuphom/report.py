"""Uniform pass/fail reports for the self-check routines."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    title: str
    items: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.items.append(CheckItem(name, bool(ok), detail))

    @property
    def ok(self):
        return all(item.ok for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.ok]

    def lines(self):
        out = []
        for item in self.items:
            status = "ok  " if item.ok else "FAIL"
            detail = f": {item.detail}" if item.detail else ""
            out.append(f"{status} {item.name}{detail}")
        return out
