#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
import sqlite3
import threading
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from config.settings import get_path_setting
from utils.file_utils import ensure_dir

DB_FILENAME = 'fingerprints.sqlite'

class FingerprintStore:
    """On-disk cache of star expansions keyed by canonical code"""

    _instances: Dict[str, 'FingerprintStore'] = {}
    _lock = threading.Lock()

    def __new__(cls, cache_dir=None):
        """One instance per cache directory"""
        directory = Path(cache_dir or get_path_setting('CSF_CACHE_DIR', '.csf_cache')).resolve()
        key = str(directory)
        with cls._lock:
            if key not in cls._instances:
                instance = super(FingerprintStore, cls).__new__(cls)
                instance._initialized = False
                cls._instances[key] = instance
            return cls._instances[key]

    def __init__(self, cache_dir=None):
        """Open (and create if needed) the sqlite database in the cache directory"""
        if self._initialized:
            return
        self._initialized = True
        self.logger = logging.getLogger(__name__)
        self.cache_dir = Path(cache_dir or get_path_setting('CSF_CACHE_DIR', '.csf_cache')).resolve()
        self.path = self.cache_dir / DB_FILENAME
        self.available = ensure_dir(self.cache_dir)
        if self.available:
            try:
                self._initialize_schema()
                self.logger.info("Fingerprint store opened at %s", self.path)
            except sqlite3.Error as err:
                self.logger.error("Failed to open fingerprint store: %s", err)
                self.available = False
        else:
            self.logger.warning("Cache directory %s is not usable, caching disabled", self.cache_dir)

    def get_connection(self) -> sqlite3.Connection:
        connection = sqlite3.connect(str(self.path), timeout=30)
        connection.row_factory = sqlite3.Row
        return connection

    def execute_query(self, query, params=None, fetch=True):
        """
        Execute a SQL statement and return the rows

        Args:
            query (str): SQL statement
            params (tuple, optional): Parameters for the statement
            fetch (bool, optional): Whether to fetch results

        Returns:
            list: Rows as dicts if fetch is True, else None

        Raises:
            sqlite3.Error: If execution fails
        """
        connection = None
        try:
            connection = self.get_connection()
            cursor = connection.execute(query, params or ())
            if fetch:
                return [dict(row) for row in cursor.fetchall()]
            connection.commit()
            return None
        except sqlite3.Error as err:
            self.logger.error("Failed to execute query: %s", err)
            raise
        finally:
            if connection:
                connection.close()

    def execute_many(self, query, params_list):
        """
        Execute a SQL statement for each parameter tuple in one transaction

        Raises:
            sqlite3.Error: If execution fails
        """
        connection = None
        try:
            connection = self.get_connection()
            connection.executemany(query, params_list)
            connection.commit()
        except sqlite3.Error as err:
            self.logger.error("Failed to execute batch query: %s", err)
            if connection:
                connection.rollback()
            raise
        finally:
            if connection:
                connection.close()

    def test_connection(self) -> bool:
        try:
            self.execute_query("SELECT 1")
            return True
        except sqlite3.Error as e:
            self.logger.error("Fingerprint store test failed: %s", e)
            return False

    def lookup(self, codes: Iterable[str]) -> Dict[str, Tuple[str, str]]:
        """
        Cached (fingerprint, expansion JSON) for the given canonical codes

        Returns:
            Dict[str, Tuple[str, str]]: code hex -> (fingerprint, expansion)
        """
        if not self.available:
            return {}
        found = {}
        codes = list(codes)
        # sqlite caps the number of bound parameters
        for start in range(0, len(codes), 500):
            chunk = codes[start:start + 500]
            marks = ','.join('?' * len(chunk))
            rows = self.execute_query(
                "SELECT code, fingerprint, expansion FROM fingerprints WHERE code IN (%s)" % marks,
                tuple(chunk),
            )
            for row in rows:
                found[row['code']] = (row['fingerprint'], row['expansion'])
        return found

    def save(self, entries: List[Tuple[str, int, Optional[int], str, str]]):
        """
        Store entries of (code, n, c, fingerprint, expansion)
        """
        if not self.available or not entries:
            return
        self.execute_many(
            "INSERT OR REPLACE INTO fingerprints (code, n, c, fingerprint, expansion) "
            "VALUES (?, ?, ?, ?, ?)",
            entries,
        )
        self.logger.debug("Saved %d fingerprints", len(entries))

    def count(self) -> int:
        if not self.available:
            return 0
        return self.execute_query("SELECT COUNT(*) AS total FROM fingerprints")[0]['total']

    def _initialize_schema(self):
        self.execute_query(
            """
            CREATE TABLE IF NOT EXISTS fingerprints (
                code TEXT PRIMARY KEY,
                n INTEGER NOT NULL,
                c INTEGER,
                fingerprint TEXT NOT NULL,
                expansion TEXT NOT NULL
            )
            """,
            fetch=False,
        )
        self.execute_query(
            "CREATE INDEX IF NOT EXISTS idx_fingerprint ON fingerprints (fingerprint)",
            fetch=False,
        )
