"""Calibration store"""
import logging
import os

from exceptions import CalibrationException


class CalibrationStore:
    """
    Provides the frozen-constant database

    One record per line: `tag param_hash constant`. Blank lines and lines
    starting with `#` are ignored. Records are keyed by tag; the parameter hash
    records which lattice produced the constant.
    """

    HEADER = "# tag param_hash constant"

    def __init__(self, location):
        self._location = location
        self._data = {}

        if not self._location:
            raise CalibrationException(f"Calibration location must be specified: {self._location}")

        if os.path.exists(self._location):
            with open(self._location, "r", encoding="utf-8") as store_file:
                for number, line in enumerate(store_file, start=1):
                    self._parse(line, number)

    def _parse(self, line, number):
        line = line.strip()
        if not line or line.startswith("#"):
            return

        fields = line.split()
        if len(fields) != 3:
            raise CalibrationException(f"{self._location}:{number}: expected 3 fields, got {len(fields)}")

        tag, param_hash, constant = fields
        try:
            self._data[tag] = (param_hash, float(constant))
        except ValueError as exp:
            raise CalibrationException(f"{self._location}:{number}: invalid constant {constant}") from exp

    def persist(self):
        with open(self._location, "w", encoding="utf-8", newline="\n") as store_file:
            store_file.write(self.HEADER + "\n")
            for tag in sorted(self._data):
                param_hash, constant = self._data[tag]
                store_file.write(f"{tag} {param_hash} {constant:.12g}\n")
        logging.info(f"Persisted {len(self._data)} calibration constant(s) to {self._location}")

    def get(self, tag, fallback=None):
        if tag not in self._data:
            return fallback
        return self._data[tag][1]

    def set(self, tag, param_hash, constant):
        if " " in tag or not tag:
            raise CalibrationException(f"Invalid calibration tag: {tag!r}")
        self._data[tag] = (param_hash, float(constant))

    def has(self, tag):
        return tag in self._data

    def delete(self, tag):
        del self._data[tag]

    def __len__(self):
        return len(self._data)
