"""Run reports and their text, CSV and JSON renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from mapenum import __version__

SCHEMA = 1
BIN_LABEL = {"oriented": "g", "unoriented": "chi", "moments": "F"}


@dataclass
class RunReport:
    profile: dict[int, int]
    mode: str
    bins: dict[int, int]
    totals: dict[str, int]
    elapsed_ms: float
    threads: int
    orientation: str = "oriented"
    version: str = field(default=__version__)

    @property
    def bin_label(self) -> str:
        return BIN_LABEL[self.mode]

    def to_dict(self) -> dict:
        d = asdict(self)
        return {
            "schema": SCHEMA,
            "mode": d["mode"],
            "orientation": d["orientation"],
            "profile": {str(k): v for k, v in sorted(self.profile.items())},
            "bins": {str(k): v for k, v in sorted(self.bins.items())},
            "totals": dict(self.totals),
            "elapsed_ms": self.elapsed_ms,
            "threads": self.threads,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(
            profile={int(k): int(v) for k, v in d["profile"].items()},
            mode=d["mode"],
            bins={int(k): int(v) for k, v in d["bins"].items()},
            totals={k: int(v) for k, v in d["totals"].items()},
            elapsed_ms=float(d["elapsed_ms"]),
            threads=int(d["threads"]),
            orientation=d.get("orientation", "oriented"),
            version=d.get("version", __version__),
        )

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bin", "count"])
        for k, v in sorted(self.bins.items(), reverse=self.mode == "unoriented"):
            w.writerow([k, v])
        return buf.getvalue()

    def to_table(self) -> str:
        profile = ",".join(f"{d}:{j}" for d, j in sorted(self.profile.items()))
        mode = self.mode if self.mode == self.orientation else f"{self.orientation} {self.mode}"
        lines = [f"# {mode} profile {profile}"]
        keys = sorted(self.bins, reverse=self.mode == "unoriented")
        labels = [f"{self.bin_label}={k}" for k in keys]
        width = max((len(s) for s in labels), default=0)
        cwidth = max((len(str(v)) for v in self.bins.values()), default=0)
        for label, k in zip(labels, keys):
            lines.append(f"{label:>{width}}: {self.bins[k]:>{cwidth}}")
        for name, value in self.totals.items():
            lines.append(f"# {name} = {value}")
        lines.append(f"# threads = {self.threads}, elapsed = {self.elapsed_ms:.1f} ms")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_table()
