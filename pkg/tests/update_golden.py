"""Regenerate the golden stdout files under tests/golden/.

Run after an intentional output-format change, then review the diff:

    python tests/update_golden.py
"""

from __future__ import annotations

import io
import os

from logicrel.cli import run

from cli_cases import CASES


def main() -> None:
    for case in CASES:
        old_env = {k: os.environ.get(k) for k in case.env}
        os.environ.update(case.env)
        try:
            stdin = io.StringIO(case.stdin) if case.stdin is not None else None
            code, out, err = run(list(case.argv), stdin)
        finally:
            for k, v in old_env.items():
                if v is None:
                    os.environ.pop(k, None)
                else:
                    os.environ[k] = v
        if code != case.code or err != case.stderr:
            raise SystemExit(
                f"{case.name}: exit/stderr drifted from the case table "
                f"(got code {code}, stderr {err!r}); update cli_cases.py first"
            )
        case.stdout_file.write_text(out, encoding="utf-8")
        print(f"wrote {case.stdout_file.name} ({len(out)} bytes)")


if __name__ == "__main__":
    main()
