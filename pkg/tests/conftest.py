import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chandas.meter_db import load_database  # noqa: E402

FIGURE4 = [
    "नमस्ते सदा वत्सले मातृभुमे",
    "त्वया हिन्दुभूमे सुखं वर्धितोऽहम्।",
    "महामङ्गले पुण्यभूमे त्वदर्थे",
    "पतत्वेष कायो नमस्ते नमस्ते॥",
]
SHALINI = [
    "माता रामो मम पिता रामचन्द्रः।",
    "स्वामी रामो मत्सखा रामचन्द्रः।",
    "सर्वस्वं मे रामचन्द्रो दयालुर्",
    "नाम्यं जाने नैव जाने न जाने॥",
]
MARATHI = "सुसंगति सदा घडो सुजन वाक्य कानी पडो"
TELUGU = "సిరికిం జెవ్వుడు కంఖచక్రయుగముం జేదోయి సంధించడే"


@pytest.fixture(scope="session")
def db():
    return load_database()


# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
