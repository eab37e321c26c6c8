from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# filled by test_acceptance.py: criterion number -> (passed, description, seconds, limit)
ACCEPTANCE: dict[int, tuple[bool, str, float, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, what, secs, limit = ACCEPTANCE[num]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {what} ({secs:.3f} s, limit {limit:g} s)"
        )
