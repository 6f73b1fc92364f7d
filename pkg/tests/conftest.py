def pytest_terminal_summary(terminalreporter):
    """Print one verdict line per acceptance criterion after the run."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in RESULTS:
        terminalreporter.write_line(f"[acceptance] {label}: {verdict}")
