value = 10  # from x import y
v = 'semi; import also_fake; done'
print('plain output')
x = {1: 'one', 2: 'two'}
class Wrapper:
    import networkx.drawing.nx_agraph as helper, yaml as main, os
    def method(self):
        import networkx.drawing.nx_agraph as helper, yaml as main, os
x = 1; y = []
