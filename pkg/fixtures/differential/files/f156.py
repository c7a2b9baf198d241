class Wrapper:
    import pandas as alpha, flask as delta
    def method(self):
        from simplejson import beta as run, run as helper, alpha as beta
call = len('import literal_inside_call')
import scrapy
# from nowhere import nothing
