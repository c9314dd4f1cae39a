class TkcError(Exception):
    """Base error; `exit_code` is what the CLI returns for it."""
    exit_code = 1


class UsageError(TkcError):
    exit_code = 2


class InputError(TkcError):
    exit_code = 3


class EmptyGraphError(InputError):
    pass


class MalformedInputError(InputError):
    def __init__(self, count: int, line_numbers: list[int]):
        self.count = count
        self.line_numbers = line_numbers
        shown = ", ".join(str(n) for n in line_numbers)
        super().__init__(
            f"{count} malformed line(s) (first at line {shown}); "
            "use --lenient to skip them"
        )


class OutOfOrderAppendError(TkcError, ValueError):
    def __init__(self, t: int, t_max: int):
        self.t = t
        self.t_max = t_max
        super().__init__(
            f"cannot append timestamp {t} after timestamp {t_max}"
        )


class OracleInconsistencyError(TkcError):
    pass
