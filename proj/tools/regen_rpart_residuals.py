# Offline regeneration of rpart(Sepal.Width ~ Sepal.Length + Petal.Length + Petal.Width + Species, data=iris)
# defaults: minsplit=20, minbucket=7, cp=0.01, anova method.
import numpy as np
from sklearn.datasets import load_iris
d = load_iris()
X = d.data; sp = np.array(d.target_names)[d.target]
y = X[:,1]
preds = {'Sepal.Length': X[:,0], 'Petal.Length': X[:,2], 'Petal.Width': X[:,3], 'Species': sp}
MINSPLIT, MINBUCKET, CP = 20, 7, 0.01
def ss(v): return float(((v - v.mean())**2).sum()) if len(v) else 0.0
root_risk = ss(y); alpha = CP*root_risk

def best_split(idx):
    yy = y[idx]; parent = ss(yy); best=None
    for name, col in preds.items():
        c = col[idx]
        if name == 'Species':
            cats = sorted(set(c), key=lambda k: yy[c==k].mean())
            for k in range(1, len(cats)):
                left = np.isin(c, cats[:k])
                if left.sum() < MINBUCKET or (~left).sum() < MINBUCKET: continue
                imp = parent - ss(yy[left]) - ss(yy[~left])
                if best is None or imp > best[0] + 1e-12: best=(imp, name, left)
        else:
            order = np.argsort(c, kind='stable'); cs = c[order]; n=len(cs)
            for i in range(MINBUCKET-1, n-MINBUCKET):
                if cs[i] == cs[i+1]: continue
                thr = (cs[i]+cs[i+1])/2
                left = c < thr
                imp = parent - ss(yy[left]) - ss(yy[~left])
                if best is None or imp > best[0] + 1e-12: best=(imp, name, left)
    return best

def grow(idx):
    node = {'idx': idx, 'risk': ss(y[idx])}
    if len(idx) < MINSPLIT or node['risk'] <= alpha: return node
    b = best_split(idx)
    if b is None: return node
    node['split'] = b[1]; node['L'] = grow(idx[b[2]]); node['R'] = grow(idx[~b[2]])
    return node

def leaves(n): return [n] if 'L' not in n else leaves(n['L'])+leaves(n['R'])
def prune(n):
    while True:
        internal=[]
        def walk(t):
            if 'L' in t:
                lv=leaves(t); g=(t['risk']-sum(l['risk'] for l in lv))/(len(lv)-1)
                internal.append((g,t)); walk(t['L']); walk(t['R'])
        walk(n)
        if not internal: return
        g,t = min(internal, key=lambda p:p[0])
        if g > alpha: return
        del t['L']; del t['R']

tree = grow(np.arange(150)); prune(tree)
res = np.empty(150)
for l in leaves(tree): res[l['idx']] = y[l['idx']] - y[l['idx']].mean()
print(len(leaves(tree)), repr(float((res**2).sum())))
np.save('/tmp/gen/res.npy', res)
