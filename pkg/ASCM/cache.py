from functools import wraps


class Cache(object):
    '''
    Memoise a method of an immutable object, keyed by the method name and its positional arguments.

    The owner keeps the results in `cache_data` and can switch caching off with `cache_state = False`.
    '''
    def __init__(self, group='default'):
        self.group = group

    def __call__(self, f):
        @wraps(f)
        def g(*args, **kwargs):
            self_f = args[0]
            name = f.__name__

            if not getattr(self_f, 'cache_state', True):
                return f(*args, **kwargs)

            if not hasattr(self_f, 'cache_data'):
                self_f.cache_data = {}
            if name not in self_f.cache_data:
                self_f.cache_data[name] = {'used_time': 0}
            this_func_cache_data = self_f.cache_data[name]

            keyname = (self.group, args[1:], tuple(sorted(kwargs.items())))
            if keyname not in this_func_cache_data:
                this_func_cache_data[keyname] = f(*args, **kwargs)
            else:
                this_func_cache_data['used_time'] += 1
            return this_func_cache_data[keyname]
        g.__name__ = f.__name__
        return g
