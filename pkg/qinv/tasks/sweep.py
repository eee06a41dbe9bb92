import asyncio
import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from qinv.core.models import QuasiOrder, component_key
from qinv.repositories import ComponentRepository
from qinv.services.quasi_core import QuasiOracle

logger = logging.getLogger(__name__)


def dimension_job(twice_m: int, characteristic: int, degree: int) -> int:
    """
    One oracle solve, run inside a worker process.

    Each job builds its own oracle and repository so no state crosses
    process boundaries.
    """
    oracle = QuasiOracle(ComponentRepository(max_size=1))
    return oracle.dim_component(QuasiOrder(twice_m, characteristic), degree)


async def sweep_dimensions_internal(
    order: QuasiOrder, degrees: Sequence[int], workers: int
) -> list[int]:
    """
    Fan dimension solves out over a process pool.

    Every degree is an independent job; results are gathered back into
    the order of ``degrees`` regardless of completion order.

    Error Handling:
        - A failed degree is logged and its exception re-raised after the
          remaining jobs have been collected.

    Returns:
        list[int]: ``dim_component(order, d)`` for each d in ``degrees``.
    """
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:

        async def run_one(degree: int) -> int:
            try:
                dimension = await loop.run_in_executor(
                    pool, dimension_job, order.twice_m, order.characteristic, degree
                )
                logger.info(f"✅ {order} degree {degree}: dim {dimension}")
                return dimension
            except Exception as e:
                logger.error(f"❌ {order} degree {degree} error: {e}")
                raise

        results = await asyncio.gather(
            *(run_one(d) for d in degrees), return_exceptions=True
        )

    for result in results:
        if isinstance(result, BaseException):
            raise result
    return [int(r) for r in results]  # type: ignore[arg-type]


def sweep_dimensions(
    order: QuasiOrder,
    degrees: Sequence[int],
    workers: int,
    repo: ComponentRepository | None = None,
) -> list[int]:
    """
    Dimensions of several graded components, optionally in parallel.

    Degrees already in ``repo`` are answered from it; only the misses go to
    the pool, and their results are stored back.

    Args:
        order: Quasi-invariance order.
        degrees: Degrees to solve, in output order.
        workers: Process count; 1 or less evaluates in-process.
        repo: Component cache shared with the caller's oracle.

    Returns:
        list[int]: One dimension per requested degree.
    """
    if workers <= 1:
        oracle = QuasiOracle(repo)
        return [oracle.dim_component(order, d) for d in degrees]
    known: dict[int, int] = {}
    if repo is not None:
        for degree in degrees:
            cached = repo.get_dimension(component_key(order, degree))
            if cached is not None:
                known[degree] = cached
    missing = list(dict.fromkeys(d for d in degrees if d not in known))
    if missing:
        solved = asyncio.run(sweep_dimensions_internal(order, missing, workers))
        known.update(zip(missing, solved))
        if repo is not None:
            for degree, dimension in zip(missing, solved):
                repo.add_dimension(component_key(order, degree), dimension)
    logger.info(
        f"✅ Sweep over {len(degrees)} degrees completed, {len(missing)} solved"
    )
    return [known[d] for d in degrees]
