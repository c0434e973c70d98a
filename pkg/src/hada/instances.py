"""Reading and writing instance files.

An instance file is a single JSON document with exact coordinates:

    {
      "space": 2,
      "seed": 7,
      "lines": {
        "L": [3, 1, -30],
        "M": {"H": [1, 2, 1, 1], "K": [1, 1, 1, -3]}
      },
      "points": {"X": [[6, 12, 1], ["22", "54", "4"]]}
    }

Coordinates are integers or "p/q" strings; floats are rejected so no
precision is ever lost.  A bare coefficient vector under "lines" is a
hyperplane (a line in the plane, a plane in 3-space); the {"H", "K"}
pair form describes a line in 3-space.  Emitted instances are fully
canonical, so parse(emit(x)) reproduces x exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import HadaError, InstanceError
from .projective import Hyperplane, PointSet, ProjPoint, parse_rational
from .space import Line3


@dataclass
class Instance:
    space: int
    lines: dict[str, Hyperplane] = field(default_factory=dict)
    lines3: dict[str, Line3] = field(default_factory=dict)
    point_sets: dict[str, PointSet] = field(default_factory=dict)
    seed: Optional[int] = None

    def names(self):
        return set(self.lines) | set(self.lines3) | set(self.point_sets)

    def line(self, name: str) -> Hyperplane:
        if name not in self.lines:
            raise InstanceError(f"no hyperplane named {name!r}")
        return self.lines[name]

    def line3(self, name: str) -> Line3:
        if name not in self.lines3:
            raise InstanceError(f"no space line named {name!r}")
        return self.lines3[name]

    def point_set(self, name: str) -> PointSet:
        if name not in self.point_sets:
            raise InstanceError(f"no point set named {name!r}")
        return self.point_sets[name]


def _coords(values, length, where):
    if not isinstance(values, list) or len(values) != length:
        raise InstanceError(f"{where}: expected {length} coordinates")
    out = []
    for i, v in enumerate(values):
        if isinstance(v, float):
            raise InstanceError(f"{where}[{i}]: floats are rejected, use 'p/q'")
        try:
            out.append(parse_rational(v))
        except HadaError as exc:
            raise InstanceError(f"{where}[{i}]: {exc}") from None
    return out


def parse_instance_dict(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    space = data.get("space")
    if space not in (2, 3):
        raise InstanceError(f"space must be 2 or 3, got {space!r}")
    seed = data.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise InstanceError("seed must be an integer")
    ncoords = space + 1
    inst = Instance(space=space, seed=seed)
    seen = set()

    for name, value in (data.get("lines") or {}).items():
        if name in seen:
            raise InstanceError(f"duplicate name {name!r}")
        seen.add(name)
        where = f"lines.{name}"
        if isinstance(value, dict):
            if space != 3 or set(value) != {"H", "K"}:
                raise InstanceError(
                    f"{where}: plane pairs need space 3 and keys H, K"
                )
            try:
                inst.lines3[name] = Line3(
                    Hyperplane(_coords(value["H"], 4, where + ".H")),
                    Hyperplane(_coords(value["K"], 4, where + ".K")),
                )
            except HadaError as exc:
                raise InstanceError(f"{where}: {exc}") from None
        else:
            try:
                inst.lines[name] = Hyperplane(_coords(value, ncoords, where))
            except HadaError as exc:
                raise InstanceError(f"{where}: {exc}") from None

    for name, rows in (data.get("points") or {}).items():
        if name in seen:
            raise InstanceError(f"duplicate name {name!r}")
        seen.add(name)
        where = f"points.{name}"
        if not isinstance(rows, list) or not rows:
            raise InstanceError(f"{where}: expected a nonempty list of points")
        pts = []
        for i, row in enumerate(rows):
            try:
                pts.append(ProjPoint(_coords(row, ncoords, f"{where}[{i}]")))
            except HadaError as exc:
                raise InstanceError(f"{where}[{i}]: {exc}") from None
        try:
            inst.point_sets[name] = PointSet(pts)
        except HadaError as exc:
            raise InstanceError(f"{where}: {exc}") from None

    return inst


def parse_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path} is not valid JSON: {exc}") from None
    return parse_instance_dict(data)


def emit_instance(inst: Instance) -> dict:
    """Canonical JSON-ready dict; round-trips through parse exactly."""
    data: dict = {"space": inst.space}
    if inst.seed is not None:
        data["seed"] = inst.seed
    lines: dict = {}
    for name, h in inst.lines.items():
        lines[name] = list(h.dual.coords)
    for name, l in inst.lines3.items():
        lines[name] = {"H": list(l.h.dual.coords), "K": list(l.k.dual.coords)}
    if lines:
        data["lines"] = lines
    if inst.point_sets:
        data["points"] = {
            name: [list(p.coords) for p in ps]
            for name, ps in inst.point_sets.items()
        }
    return data


def save_instance(inst: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(emit_instance(inst), fh, indent=2)
        fh.write("\n")
