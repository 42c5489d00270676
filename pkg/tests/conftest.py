def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for no in sorted(results):
        ok, detail = results[no]
        terminalreporter.write_line(f"criterion {no:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    missing = [no for no in range(1, 13) if no not in results]
    if missing:
        terminalreporter.write_line(f"not run: {missing}")
