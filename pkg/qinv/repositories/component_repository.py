import threading
from collections import OrderedDict

from qinv.core.config import settings
from qinv.core.models import ComponentKey, GradedComponentBasis


class ComponentRepository:
    """
    In-memory store of computed graded components.

    Keeps two least-recently-used maps keyed by
    ``(p, twice_m, degree, eigen-slice)``: full echelon bases, and bare
    dimensions for the sweeps that only need a rank. The oracle consults it
    before building a constraint system, so Hilbert sweeps, generator
    searches and verification share their kernels.

    Thread Safety: guarded by a lock; FastAPI runs sync handlers on a
    thread pool that shares the process-wide instance.
    """

    def __init__(self, max_size: int | None = None) -> None:
        """
        Initialize an empty repository.

        Args:
            max_size: Entries kept per map before the least recently used
                      one is dropped. Defaults to ``oracle.cache_size``.
        """
        self.max_size = max_size or settings.oracle.cache_size
        self._bases: OrderedDict[ComponentKey, GradedComponentBasis] = OrderedDict()
        self._dimensions: OrderedDict[ComponentKey, int] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: ComponentKey) -> GradedComponentBasis | None:
        """
        Look up a stored basis.

        Args:
            key: ``(p, twice_m, degree, eigen-slice)``.

        Returns:
            GradedComponentBasis | None: The basis, or None on a miss.
        """
        with self._lock:
            basis = self._bases.get(key)
            if basis is not None:
                self._bases.move_to_end(key)
            return basis

    def add(self, basis: GradedComponentBasis) -> None:
        with self._lock:
            self._bases[basis.key] = basis
            self._bases.move_to_end(basis.key)
            while len(self._bases) > self.max_size:
                self._bases.popitem(last=False)
        self.add_dimension(basis.key, basis.dimension)

    def get_dimension(self, key: ComponentKey) -> int | None:
        with self._lock:
            value = self._dimensions.get(key)
            if value is not None:
                self._dimensions.move_to_end(key)
            return value

    def add_dimension(self, key: ComponentKey, dimension: int) -> None:
        with self._lock:
            self._dimensions[key] = dimension
            self._dimensions.move_to_end(key)
            while len(self._dimensions) > self.max_size:
                self._dimensions.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._bases.clear()
            self._dimensions.clear()

    def __len__(self) -> int:
        return len(self._bases)


component_repository = ComponentRepository()
