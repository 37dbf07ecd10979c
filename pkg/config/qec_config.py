import os


ORACLE_CAP_ENV = "HYBRIDQEC_ORACLE_CAP"


class QecConfig(object):
    def __init__(self):
        self.n_jobs = None
        self.chunk_size = None
        self.letter_block = None
        self.full_search_limit = None
        self.default_weight_cap = None
        self.oracle_cap = None
        self.oracle_warn_dim = None
        self.tolerance = None
        self.projector_tolerance = None
        self.verbose = False
        self.set_parameters()

    def set_parameters(self):
        self.n_jobs, self.chunk_size, self.letter_block, self.full_search_limit, self.default_weight_cap = \
            self.search_pars()
        self.oracle_cap, self.oracle_warn_dim, self.tolerance, self.projector_tolerance = self.oracle_pars()

    def search_pars(self):
        n_jobs = 1  # joblib workers, threads
        chunk_size = 256  # supports per task
        letter_block = 4096  # letter assignments per syndrome array
        full_search_limit = 12  # search every weight up to n for n <= this
        default_weight_cap = 4
        return n_jobs, chunk_size, letter_block, full_search_limit, default_weight_cap

    def oracle_pars(self):
        oracle_cap = 4096
        value = os.environ.get(ORACLE_CAP_ENV)
        if value is not None and value.strip():
            try:
                oracle_cap = int(value)
            except ValueError:
                raise ValueError("%s must be an integer, got %r" % (ORACLE_CAP_ENV, value))
        oracle_warn_dim = 1024
        tolerance = 1e-8
        projector_tolerance = 1e-9
        return oracle_cap, oracle_warn_dim, tolerance, projector_tolerance

    def default_max_weight(self, n):
        if n <= self.full_search_limit:
            return n
        return min(n, self.default_weight_cap)

    def update(self, **kwargs):
        for key, value in kwargs.items():
            if value is None:
                continue
            if not hasattr(self, key):
                print("Warning: %s is not supported." % key)
                continue
            setattr(self, key, value)
        return self


if __name__ == "__main__":
    args = QecConfig()
    print(vars(args))
