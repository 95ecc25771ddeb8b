SAMUEL_DEFAULT_NMAX = 12
SAMUEL_DEFAULT_NCAP = 40
SAMUEL_DEFAULT_SEED = 0
SAMUEL_DEFAULT_PRIME = 32003

SAMUEL_DEFAULT_C_WINDOW = 3
SAMUEL_DEFAULT_SUPERFICIAL_NMAX = 12
SAMUEL_DEFAULT_SEARCH_ATTEMPTS = 20
SAMUEL_DEFAULT_SEARCH_RANGES = (5, 50)

# windows used by the lab pipeline, kept smaller than the function defaults
SAMUEL_LAB_SUPERFICIAL_NMAX = 6
SAMUEL_LAB_VV_NMAX = 6
SAMUEL_DEFAULT_L_SET = (1, 2, 3)
SAMUEL_DEFAULT_REDUCTION_CAP = 8
SAMUEL_DEFAULT_WORKERS = 1

SAMUEL_REPORT_SCHEMA = 1

# configuration keys
CONF_NMAX = "samuel.nmax"
CONF_NCAP = "samuel.ncap"
CONF_SEED = "samuel.seed"
CONF_C_WINDOW = "samuel.c_window"
CONF_SUPERFICIAL_NMAX = "samuel.superficial_nmax"
CONF_VV_NMAX = "samuel.vv_nmax"
CONF_L_SET = "samuel.l_set"
CONF_WORKERS = "samuel.workers"
