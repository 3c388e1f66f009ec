from __future__ import annotations

import csv
from pathlib import Path

import pytest

from mscskos import BuildConfig, build_scheme

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"

FIXTURE_LICENSE = "https://creativecommons.org/licenses/by-sa/4.0/"

FIXTURE_CONFIG = BuildConfig(
    version_id="msc2020",
    license_iri=FIXTURE_LICENSE,
    title="Mathematics Subject Classification 2020",
    creators=("zbMATH Open", "Mathematical Reviews"),
    issued="2021-05-07",
)

OLD_FIXTURE_CONFIG = BuildConfig(
    version_id="msc2010",
    license_iri=FIXTURE_LICENSE,
    title="Mathematics Subject Classification 2010",
)

OLD_BASE_URI = "http://msc.org/resources/MSC/msc2010/"


def read_rows(path: Path, columns: tuple[str, ...]) -> list[tuple[str, ...]]:
    with open(path, newline="", encoding="utf-8") as handle:
        return [
            tuple((row.get(c) or "").strip() for c in columns)
            for row in csv.DictReader(handle)
        ]


def load_concept_rows(name: str) -> list[tuple[str, str, str]]:
    return read_rows(DATA_DIR / name, ("code", "text", "description"))


def load_translation_rows(name: str) -> list[tuple[str, str, str]]:
    return read_rows(DATA_DIR / name, ("code", "lang", "label"))


def load_change_rows(name: str) -> list[tuple[str, str, str, str]]:
    return read_rows(DATA_DIR / name, ("category", "sources", "targets", "note"))


@pytest.fixture(scope="session")
def fixture_scheme():
    return build_scheme(
        load_concept_rows("concepts_msc2020.csv"),
        load_translation_rows("translations_msc2020.csv"),
        FIXTURE_CONFIG,
    )


@pytest.fixture(scope="session")
def old_fixture_scheme():
    return build_scheme(
        load_concept_rows("concepts_msc2010.csv"), (), OLD_FIXTURE_CONFIG
    )
