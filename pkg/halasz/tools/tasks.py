"""Tasks"""
import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor


class Tasks:
    """
    Simple worker pool

    Blocking computations are spawned onto a thread pool and gathered in
    spawn order, so results never depend on the number of workers.
    """

    def __init__(self, threads=1):
        self._threads = max(1, int(threads))
        self._executor = None
        self._tasks = []

    async def __aenter__(self):
        self._executor = ThreadPoolExecutor(max_workers=self._threads)
        return self

    async def __aexit__(self, exc_type, exc, tb):  # pylint: disable=invalid-name
        await self._shutdown()

    async def _shutdown(self):
        for task in self._tasks:
            if task.done():
                continue
            task.cancel()
            try:
                await task
            except asyncio.CancelledError:
                pass
        self._executor.shutdown(wait=True)

    async def _runner(self, func, args, name):
        if name:
            logging.debug(f"Spawning task to {name}...")
        loop = asyncio.get_running_loop()
        try:
            result = await loop.run_in_executor(self._executor, func, *args)
        except Exception as exp:  # pylint: disable=broad-except
            logging.exception(f"Task {name or func} failed: {exp}")
            raise
        if name:
            logging.debug(f"{name} completed")
        return result

    def spawn(self, func, *args, name=None):
        self._tasks.append(asyncio.ensure_future(self._runner(func, args, name)))

    async def gather(self):
        logging.info(f"Awaiting {len(self._tasks)} tasks on {self._threads} worker(s)")
        results = await asyncio.gather(*self._tasks)
        self._tasks = []
        return list(results)


def map_ordered(func, items, threads=1):
    """
    Apply func to every item, in parallel when threads > 1, keeping input order
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))
