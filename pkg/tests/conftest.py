ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok, note = ACCEPTANCE_RESULTS[num]
        line = f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
