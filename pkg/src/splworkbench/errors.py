"""Exception hierarchy shared by all workbench modules."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench."""


class UnassignedVariable(WorkbenchError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is not assigned")
        self.name = name


class TooManyVariables(WorkbenchError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} variables exceed the enumeration cap of {limit}")
        self.count = count
        self.limit = limit


class FormulaSyntaxError(WorkbenchError):
    def __init__(self, message: str, position: int | None = None, line_no: int | None = None):
        where = ""
        if line_no is not None:
            where += f" (line {line_no})"
        if position is not None:
            where += f" at offset {position}"
        super().__init__(message + where)
        self.position = position
        self.line_no = line_no


class UnbalancedDirectives(WorkbenchError):
    def __init__(self, path: str, line: int, detail: str = ""):
        msg = f"{path}:{line}: unbalanced preprocessor directives"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.path = path
        self.line = line


class SourceTreeMissing(WorkbenchError):
    def __init__(self, root):
        super().__init__(f"source tree {root} does not exist")
        self.root = root


class BuildTreeMissing(WorkbenchError):
    def __init__(self, root):
        super().__init__(f"build tree {root} does not exist")
        self.root = root


class CycleDetected(WorkbenchError):
    def __init__(self, path):
        super().__init__(f"cyclic directory recursion at {path}")
        self.path = path


class DimacsError(WorkbenchError):
    """Base class for DIMACS parse failures."""


class MalformedHeader(DimacsError):
    def __init__(self, detail: str):
        super().__init__(f"malformed DIMACS header: {detail}")


class LiteralOutOfRange(DimacsError):
    def __init__(self, literal: int, max_var: int):
        super().__init__(f"literal {literal} outside declared range 1..{max_var}")
        self.literal = literal


class MissingTerminator(DimacsError):
    def __init__(self):
        super().__init__("last DIMACS clause is not terminated by 0")


class MalformedRow(WorkbenchError):
    def __init__(self, line_no: int, detail: str = ""):
        super().__init__(f"malformed CSV row at line {line_no}" + (f": {detail}" if detail else ""))
        self.line_no = line_no


class ConfigError(WorkbenchError):
    """Base class for configuration problems (CLI exit code 1)."""


class MalformedLine(ConfigError):
    def __init__(self, line_no: int, text: str):
        super().__init__(f"line {line_no}: expected 'key = value', got {text!r}")
        self.line_no = line_no


class ConfigInvalid(ConfigError):
    def __init__(self, problems: list[str]):
        super().__init__("invalid configuration:\n  " + "\n  ".join(problems))
        self.problems = list(problems)


class DslError(ConfigError):
    """Base class for pipeline-DSL failures."""


class UnknownComponent(DslError):
    def __init__(self, name: str):
        super().__init__(f"unknown component {name!r}")
        self.name = name


class ArityMismatch(DslError):
    def __init__(self, name: str, expected: str, got: int):
        super().__init__(f"{name} expects {expected} input(s), got {got}")
        self.name = name
        self.expected = expected
        self.got = got


class DslSyntaxError(DslError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RunError(WorkbenchError):
    """Base class for runtime failures (CLI exit code 2)."""


class ExtractorTimeout(RunError):
    def __init__(self, pipeline: str, timeout_ms: int):
        super().__init__(f"{pipeline} pipeline exceeded its timeout of {timeout_ms} ms")
        self.pipeline = pipeline


class AnalysisFailed(RunError):
    def __init__(self, name: str, cause: BaseException):
        super().__init__(f"analysis {name} failed: {cause}")
        self.name = name
        self.cause = cause


class CacheCorrupt(WorkbenchError):
    def __init__(self, path, detail: str = ""):
        super().__init__(f"corrupt cache file {path}" + (f": {detail}" if detail else ""))
        self.path = path


class ArchiveIncomplete(RunError):
    def __init__(self, missing: list[str]):
        super().__init__("archive is missing: " + ", ".join(missing))
        self.missing = list(missing)


class ReproductionMismatch(WorkbenchError):
    def __init__(self, file: str, expected_hash: str, got_hash: str | None):
        super().__init__(f"{file}: expected {expected_hash}, got {got_hash}")
        self.file = file
        self.expected_hash = expected_hash
        self.got_hash = got_hash
