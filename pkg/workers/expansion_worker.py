#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional

from tqdm import tqdm

from config.settings import get_jobs_setting
from handlers.message_handler import canonical_json
from services.graph_io import parse_graph6
from services.star_engine import get_engine

def expand_graph6(text: str) -> str:
    """
    Expand one graph given as graph6 and return its canonical expansion JSON

    Runs inside pool processes; each process keeps its own engine memo.
    """
    return canonical_json(get_engine().star_expand(parse_graph6(text)).to_dict())

class ExpansionWorker:
    """Fans star expansions of many graphs out over worker processes"""

    def __init__(self, jobs: Optional[int] = None, progress: bool = False, description: str = 'expand'):
        """
        Args:
            jobs (int, optional): Worker processes, CSF_JOBS when None; 1 runs in-process
            progress (bool): Show a tqdm bar on stderr
            description (str): Progress bar label
        """
        self.logger = logging.getLogger(__name__)
        self.jobs = jobs if jobs and jobs > 0 else get_jobs_setting()
        self.progress = progress
        self.description = description

    def run(self, graph6_list: Iterable[str]) -> List[str]:
        """
        Expansion JSON for every input, in input order

        Args:
            graph6_list: graph6 strings

        Returns:
            List[str]: Canonical expansion JSON per graph
        """
        items = list(graph6_list)
        if not items:
            return []
        self.logger.info("Expanding %d graphs with %d job(s)", len(items), self.jobs)
        if self.jobs == 1 or len(items) == 1:
            results = map(expand_graph6, items)
            return list(self._track(results, len(items)))
        chunksize = max(1, len(items) // (self.jobs * 8))
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            results = executor.map(expand_graph6, items, chunksize=chunksize)
            return list(self._track(results, len(items)))

    def _track(self, results, total):
        if not self.progress:
            return results
        return tqdm(results, total=total, desc=self.description, unit='graph', leave=False)
