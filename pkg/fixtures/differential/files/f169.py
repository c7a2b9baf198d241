data = {'key': [1, 2], 'other': {'nested': True}}
# import commented_out
import lxml, numpy, pandas
