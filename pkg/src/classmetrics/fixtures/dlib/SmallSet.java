package dlib;

public abstract class SmallSet extends BaseObject
{
    protected int[] members;
    protected int used;

    public SmallSet (int capacity)
    {
        members = new int[capacity];
        used = 0;
    }

    public abstract boolean accepts (int candidate);

    public boolean add (int value)
    {
        if (!accepts(value))
        {
            return( false );
        }
        if (indexOf(value) >= 0)
        {
            return( false );
        }
        members[used] = value;
        used = used + 1;
        return( true );
    }

    public int indexOf (int value)
    {
        for (int i = 0; i < used; i = i + 1)
        {
            if (members[i] == value)
            {
                return( i );
            }
        }
        return( -1 );
    }

    public int size ()
    {
        return( used );
    }
}
