"""Text serialization for trained probes (`#fxprobe-model v1`).

Floats are written with 17 significant digits so loaded models reproduce
predictions bit-for-bit.
"""

from __future__ import annotations

from ..errors import ParseError
from .boosting import TreeBoostClassifier, TreeBoostMultilabel, TreeBoostRegressor, _BoostedScore
from .trees import LEAF, RegressionTree


def _f(value: float) -> str:
    return "%.17g" % value


def _write_booster(fh, index: int, booster: _BoostedScore | None, constant) -> None:
    if booster is None:
        fh.write(f"booster {index} constant={constant}\n")
        return
    fh.write(f"booster {index} base={_f(booster.base_score)} trees={len(booster.trees)}\n")
    for t_idx, tree in enumerate(booster.trees):
        fh.write(f"tree {t_idx} nodes={tree.n_nodes}\n")
        for n in range(tree.n_nodes):
            fh.write(
                f"node {tree.feature[n]} {_f(tree.threshold[n])} "
                f"{tree.left[n]} {tree.right[n]} {_f(tree.value[n])}\n"
            )


def save_probe(model, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"#fxprobe-model v1 task={model.task}\n")
        fh.write(
            "config n_trees=%d max_depth=%d learning_rate=%s min_samples_leaf=%d seed=%d\n"
            % (model.n_trees, model.max_depth, _f(model.learning_rate), model.min_samples_leaf, model.seed)
        )
        if model.task == "regression":
            _write_booster(fh, 0, model.booster_, None)
        elif model.task == "single_label":
            fh.write("classes " + ",".join(model.classes_) + "\n")
            for i, booster in enumerate(model.boosters_):
                _write_booster(fh, i, booster, None)
        else:
            fh.write("labels " + ",".join(model.label_names_) + "\n")
            for i, booster in enumerate(model.boosters_):
                _write_booster(fh, i, booster, model.constants_[i])
        fh.write("end\n")


class _Lines:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def next(self) -> tuple[int, str]:
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            self.pos += 1
            if line.strip():
                return self.pos, line.strip()
        raise ParseError(len(self.lines), "unexpected end of model file")

    def peek(self) -> str:
        pos = self.pos
        try:
            _, line = self.next()
        finally:
            self.pos = pos
        return line


def _read_tree(reader: _Lines, max_depth: int, min_samples_leaf: int) -> RegressionTree:
    line_no, line = reader.next()
    parts = line.split()
    if parts[0] != "tree":
        raise ParseError(line_no, f"expected tree header, got {line!r}")
    n_nodes = int(parts[2].split("=", 1)[1])
    tree = RegressionTree(max_depth, min_samples_leaf)
    for _ in range(n_nodes):
        line_no, line = reader.next()
        fields = line.split()
        if fields[0] != "node" or len(fields) != 6:
            raise ParseError(line_no, f"bad node line {line!r}")
        tree.feature.append(int(fields[1]))
        tree.threshold.append(float(fields[2]))
        tree.left.append(int(fields[3]))
        tree.right.append(int(fields[4]))
        tree.value.append(float(fields[5]))
    return tree


def _read_booster(reader: _Lines, max_depth: int, min_samples_leaf: int):
    line_no, line = reader.next()
    parts = line.split()
    if parts[0] != "booster":
        raise ParseError(line_no, f"expected booster header, got {line!r}")
    fields = dict(p.split("=", 1) for p in parts[2:])
    if "constant" in fields:
        return None, int(fields["constant"])
    booster = _BoostedScore(float(fields["base"]))
    for _ in range(int(fields["trees"])):
        booster.trees.append(_read_tree(reader, max_depth, min_samples_leaf))
    return booster, None


def load_probe(path):
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("#fxprobe-model v1"):
        raise ParseError(1, "missing '#fxprobe-model v1' header")
    meta = dict(tok.split("=", 1) for tok in lines[0].split()[1:] if "=" in tok)
    task = meta.get("task")
    reader = _Lines(lines[1:])
    line_no, line = reader.next()
    if not line.startswith("config "):
        raise ParseError(line_no + 1, "missing config line")
    cfg = dict(tok.split("=", 1) for tok in line.split()[1:])
    kwargs = dict(
        n_trees=int(cfg["n_trees"]),
        max_depth=int(cfg["max_depth"]),
        learning_rate=float(cfg["learning_rate"]),
        min_samples_leaf=int(cfg["min_samples_leaf"]),
        seed=int(cfg["seed"]),
    )
    if task == "regression":
        model = TreeBoostRegressor(**kwargs)
        model.booster_, _ = _read_booster(reader, model.max_depth, model.min_samples_leaf)
        return model
    if task == "single_label":
        model = TreeBoostClassifier(**kwargs)
        line_no, line = reader.next()
        if not line.startswith("classes "):
            raise ParseError(line_no + 1, "missing classes line")
        model.classes_ = line.split(" ", 1)[1].split(",")
        model.boosters_ = [
            _read_booster(reader, model.max_depth, model.min_samples_leaf)[0]
            for _ in model.classes_
        ]
        return model
    if task == "multi_label":
        model = TreeBoostMultilabel(**kwargs)
        line_no, line = reader.next()
        if not line.startswith("labels "):
            raise ParseError(line_no + 1, "missing labels line")
        model.label_names_ = line.split(" ", 1)[1].split(",")
        model.boosters_, model.constants_ = [], []
        for _ in model.label_names_:
            booster, constant = _read_booster(reader, model.max_depth, model.min_samples_leaf)
            model.boosters_.append(booster)
            model.constants_.append(constant)
        return model
    raise ParseError(1, f"unknown task {task!r}")
