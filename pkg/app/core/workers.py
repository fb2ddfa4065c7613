"""
Process pools shared by the search and oracle services.
"""
import multiprocessing
from concurrent.futures import ProcessPoolExecutor

# workers must not be forked from a threaded parent (uvicorn threadpool)
START_METHOD = "forkserver"


def process_pool(workers: int) -> ProcessPoolExecutor:
    """Executor whose workers start from a single-threaded server process."""
    return ProcessPoolExecutor(max_workers=workers, mp_context=multiprocessing.get_context(START_METHOD))
