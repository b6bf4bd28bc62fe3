import sys


def pytest_terminal_summary(terminalreporter):
    lines = {}
    for name, module in list(sys.modules.items()):
        if name.split(".")[-1] == "test_acceptance":
            lines.update(getattr(module, "LINES", {}))
    if lines:
        terminalreporter.section("acceptance")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
