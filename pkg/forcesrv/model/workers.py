from concurrent.futures import ThreadPoolExecutor

from flask import current_app


def run_jobs(func, items, jobs=None):
    """
    applies func to every item on a thread pool, each worker inside the application
    context of the caller; results come back in the order of items

    :param func: one argument callable
    :param items: sequence
    :param jobs: pool size, defaults to FORCESRV_MAX_JOBS
    :return: list
    """
    items = list(items)
    app = current_app._get_current_object()
    jobs = jobs or app.config.get('FORCESRV_MAX_JOBS', 1)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    def call(item):
        with app.app_context():
            return func(item)

    with ThreadPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(call, items))
