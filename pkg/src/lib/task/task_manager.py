import asyncio
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from src.lib.utils import config


@dataclass
class Task:
    """A file job submitted to the pool.

    Attributes:
        name: Name of the job function
        future: The executor future
        payload: Arguments passed to the job
    """

    name: str
    future: asyncio.Future
    payload: dict


class TaskManager:
    """Runs one synchronous job per item on a thread pool.

    Results come back in submission order whatever the completion order,
    so reports assembled from them stay in path order.
    """

    def __init__(self, workers: int = config.WORKERS):
        self.workers = workers
        self.tasks: list[Task] = []

    def add_task(self, loop: asyncio.AbstractEventLoop, executor: ThreadPoolExecutor, func: Callable, payload: dict) -> asyncio.Future:
        future = loop.run_in_executor(executor, lambda: func(**payload))
        self.tasks.append(Task(name=func.__name__, future=future, payload=payload))
        return future

    async def wait_all(self) -> list[Any]:
        return list(await asyncio.gather(*[task.future for task in self.tasks]))

    async def _run(self, func: Callable, payloads: list[dict]) -> list[Any]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            for payload in payloads:
                self.add_task(loop, executor, func, payload)
            return await self.wait_all()

    def run_all(self, func: Callable, payloads: Iterable[dict]) -> list[Any]:
        """Call func(**payload) for every payload concurrently; results in payload order."""
        self.tasks = []
        payloads = list(payloads)
        if not payloads:
            return []
        return asyncio.run(self._run(func, payloads))
